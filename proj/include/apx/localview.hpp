#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "apx/decision.hpp"
#include "apx/matrix.hpp"

namespace apx {

/// Local-view analytics: how many exemplars each point connects to, and how
/// many points each same-cluster exemplar pair shares (local strength).
struct LocalViewReport {
    std::vector<int> per_point_exemplar_count;          // |L[i]|
    std::map<std::pair<int, int>, int> pair_strength;   // (j,k), j < k, same cluster, strength >= 1
    std::map<int, int> cluster_of_exemplar;
};

/// Per-cluster histogram: (cluster id, exemplar count) -> number of points.
inline std::map<std::pair<int, int>, int> exemplar_count_histogram(const ClusteringResult& res) {
    std::map<std::pair<int, int>, int> hist;
    for (int i = 0; i < res.n; ++i)
        ++hist[{res.cluster_ids[i], static_cast<int>(res.exemplar_lists[i].size())}];
    return hist;
}

namespace detail {

inline int pair_common_points(const ClusteringResult& res, int j, int k) {
    int c = 0;
    for (int i = 0; i < res.n; ++i) {
        const auto& L = res.exemplar_lists[i];
        if (std::binary_search(L.begin(), L.end(), j) && std::binary_search(L.begin(), L.end(), k)) ++c;
    }
    return c;
}

}  // namespace detail

/// Shared-point counts between each exemplar and its M most similar
/// same-cluster exemplars. Pairs found from either endpoint are reported
/// once; zero-strength pairs are omitted.
inline LocalViewReport pair_strengths(const SimilarityMatrix& s, const ClusteringResult& res, int fanout) {
    if (fanout < 1) throw std::invalid_argument("pair_strengths: fanout must be >= 1");
    LocalViewReport report;
    report.per_point_exemplar_count.reserve(res.n);
    for (int i = 0; i < res.n; ++i)
        report.per_point_exemplar_count.push_back(static_cast<int>(res.exemplar_lists[i].size()));
    for (int e : res.exemplars) report.cluster_of_exemplar[e] = res.cluster_ids[e];

    for (int j : res.exemplars) {
        std::vector<int> peers;
        for (int k : res.exemplars)
            if (k != j && res.cluster_ids[k] == res.cluster_ids[j]) peers.push_back(k);
        std::stable_sort(peers.begin(), peers.end(), [&](int a, int b) { return s(j, a) > s(j, b); });
        if (static_cast<int>(peers.size()) > fanout) peers.resize(fanout);
        for (int k : peers) {
            const auto key = std::minmax(j, k);
            if (report.pair_strength.count({key.first, key.second})) continue;
            const int strength = detail::pair_common_points(res, j, k);
            if (strength >= 1) report.pair_strength[{key.first, key.second}] = strength;
        }
    }
    return report;
}

/// Cut weak bridges: for every same-cluster exemplar pair sharing fewer than
/// threshold points (but at least one), each common point drops its
/// assignment to the less similar of the two exemplars. Components are then
/// re-extracted; clusters may split, never merge.
inline ClusteringResult prune(const SimilarityMatrix& s, const ClusteringResult& res, int threshold) {
    if (threshold < 2) throw std::invalid_argument("prune: threshold must be >= 2");

    // candidate pairs from the input snapshot, processed in index order
    std::vector<std::pair<int, int>> weak;
    for (size_t a = 0; a < res.exemplars.size(); ++a) {
        for (size_t b = a + 1; b < res.exemplars.size(); ++b) {
            const int j = res.exemplars[a];
            const int k = res.exemplars[b];
            if (res.cluster_ids[j] != res.cluster_ids[k]) continue;
            const int strength = detail::pair_common_points(res, j, k);
            if (strength >= 1 && strength < threshold) weak.emplace_back(j, k);
        }
    }

    ClusteringResult out = res;
    for (const auto& [j, k] : weak) {
        for (int i = 0; i < out.n; ++i) {
            auto& L = out.exemplar_lists[i];
            if (!std::binary_search(L.begin(), L.end(), j) || !std::binary_search(L.begin(), L.end(), k)) continue;
            if (L.size() <= 1) continue;  // never empty a point's exemplar list
            int loser;
            if (s(i, j) < s(i, k))
                loser = j;
            else if (s(i, k) < s(i, j))
                loser = k;
            else
                loser = std::max(j, k);  // tie keeps the lower-index exemplar
            if (loser == i) loser = (loser == j) ? k : j;  // self-assignments stay; cut the bridge instead
            out.set_h(i, loser, 0);
            L.erase(std::find(L.begin(), L.end(), loser));
        }
    }
    detail::extract_components(out);
    return out;
}

/// Cluster of the most similar exemplar; s_new is indexed like the sorted
/// exemplar set. Ties go to the lower exemplar index.
inline int classify_new_point(const ClusteringResult& res, const std::vector<double>& s_new) {
    if (s_new.size() != res.exemplars.size())
        throw std::invalid_argument("classify_new_point: similarity vector does not match exemplar count");
    size_t best = 0;
    for (size_t t = 1; t < s_new.size(); ++t)
        if (s_new[t] > s_new[best]) best = t;
    return res.cluster_ids[res.exemplars[best]];
}

}  // namespace apx
