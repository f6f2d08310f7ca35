#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "apx/ap.hpp"
#include "apx/matrix.hpp"

namespace apx {

/// Clustering output: binary assignment matrix H, exemplar set E, per-point
/// exemplar lists L, and one contiguous cluster id per point.
struct ClusteringResult {
    int n = 0;
    std::vector<uint8_t> H;  // row-major n*n; H[i*n+j] = 1 iff i is assigned to exemplar j
    std::vector<int> exemplars;
    std::vector<std::vector<int>> exemplar_lists;
    std::vector<int> cluster_ids;

    uint8_t h(int i, int j) const { return H[static_cast<size_t>(i) * n + j]; }
    void set_h(int i, int j, uint8_t v) { H[static_cast<size_t>(i) * n + j] = v; }

    int num_clusters() const {
        int k = 0;
        for (int c : cluster_ids) k = std::max(k, c + 1);
        return k;
    }

    bool is_exemplar(int k) const { return std::binary_search(exemplars.begin(), exemplars.end(), k); }
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

/// Component labels from a union-find, contiguous from 0 in order of the
/// lowest point index in each component.
inline std::vector<int> labels_from(UnionFind& uf, int n) {
    std::vector<int> labels(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        const int r = uf.find(i);
        if (labels[r] < 0) labels[r] = next++;
        labels[i] = labels[r];
    }
    return labels;
}

}  // namespace detail

/// Connected components of a symmetric binary adjacency matrix (flat n*n).
/// Labels are contiguous from 0, ordered by lowest member index.
inline std::vector<int> connected_components(const std::vector<uint8_t>& adj, int n) {
    if (static_cast<size_t>(n) * n != adj.size())
        throw std::invalid_argument("connected_components: adjacency size mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((adj[static_cast<size_t>(i) * n + j] != 0) != (adj[static_cast<size_t>(j) * n + i] != 0))
                throw std::invalid_argument("connected_components: adjacency not symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
    detail::UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adj[static_cast<size_t>(i) * n + j]) uf.unite(i, j);
    return detail::labels_from(uf, n);
}

namespace detail {

/// Rebuild exemplar lists and component-based cluster ids from H and E.
/// The component graph is the symmetrized H: edge (u,v) iff H[u,v] or H[v,u].
inline void extract_components(ClusteringResult& res) {
    const int n = res.n;
    res.exemplar_lists.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (res.h(i, j)) res.exemplar_lists[i].push_back(j);
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (res.h(i, j)) uf.unite(i, j);
    res.cluster_ids = labels_from(uf, n);
}

inline int argmax_diag(const BeliefMatrix& b) {
    int best = 0;
    for (int k = 1; k < b.size(); ++k)
        if (b(k, k) > b(best, best)) best = k;
    return best;
}

}  // namespace detail

/// Decision mechanism: threshold beliefs at zero, keep exemplar columns
/// only, attach left-out points to their most similar exemplar, then read
/// clusters off the connected components of the symmetrized assignment.
inline ClusteringResult decide(const SimilarityMatrix& s, const BeliefMatrix& b) {
    const int n = s.size();
    if (b.size() != n) throw std::invalid_argument("decide: belief size mismatch");
    if (n == 0) return {};

    ClusteringResult res;
    res.n = n;
    res.H.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b(i, j) > 0.0) res.set_h(i, j, 1);

    for (int k = 0; k < n; ++k)
        if (res.h(k, k)) res.exemplars.push_back(k);
    if (res.exemplars.empty()) {
        // no self-belief crossed the threshold; promote the strongest point
        const int k = detail::argmax_diag(b);
        res.exemplars.push_back(k);
        res.set_h(k, k, 1);
    }

    // local consistency: only exemplar columns may carry assignments
    for (int j = 0; j < n; ++j) {
        if (res.is_exemplar(j)) continue;
        for (int i = 0; i < n; ++i) res.set_h(i, j, 0);
    }

    // include left-out points, adding the edge so the component graph sees them
    for (int i = 0; i < n; ++i) {
        bool any = false;
        for (int j : res.exemplars)
            if (res.h(i, j)) {
                any = true;
                break;
            }
        if (!any) {
            int best = res.exemplars.front();
            for (int j : res.exemplars)
                if (s(i, j) > s(i, best)) best = j;
            res.set_h(i, best, 1);
        }
    }

    detail::extract_components(res);
    return res;
}

/// Plain-AP decision: exemplars from positive self-beliefs, every other
/// point joins its most similar exemplar. Cluster ids follow exemplar order.
inline ClusteringResult ap_decide(const SimilarityMatrix& s, const BeliefMatrix& b) {
    const int n = s.size();
    if (b.size() != n) throw std::invalid_argument("ap_decide: belief size mismatch");
    if (n == 0) return {};

    ClusteringResult res;
    res.n = n;
    res.H.assign(static_cast<size_t>(n) * n, 0);
    for (int k = 0; k < n; ++k)
        if (b(k, k) > 0.0) res.exemplars.push_back(k);
    if (res.exemplars.empty()) res.exemplars.push_back(detail::argmax_diag(b));

    std::vector<int> rank(n, -1);
    for (size_t r = 0; r < res.exemplars.size(); ++r) rank[res.exemplars[r]] = static_cast<int>(r);

    res.exemplar_lists.assign(n, {});
    res.cluster_ids.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int choice;
        if (rank[i] >= 0) {
            choice = i;
        } else {
            choice = res.exemplars.front();
            for (int j : res.exemplars)
                if (s(i, j) > s(i, choice)) choice = j;
        }
        res.set_h(i, choice, 1);
        res.exemplar_lists[i] = {choice};
        res.cluster_ids[i] = rank[choice];
    }
    return res;
}

}  // namespace apx
