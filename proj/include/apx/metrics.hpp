#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace apx {

/// Counts of points shared between ground-truth and estimated clusters.
/// Memberships are set-valued: a point may belong to several ground-truth
/// clusters (and, in principle, several estimated ones).
struct ContingencyTable {
    std::vector<std::vector<long long>> T;  // |truth clusters| x |estimated clusters|
    std::vector<long long> truth_sizes;     // N_i, membership counts
    std::vector<long long> est_sizes;       // M_j
    std::vector<int> truth_ids;             // row order, ascending
    std::vector<int> est_ids;               // column order, ascending
};

struct ScoreTriple {
    double sn = 0.0;
    double ppv = 0.0;
    double accuracy = 0.0;  // sqrt(sn * ppv)
};

inline ContingencyTable contingency(const std::vector<std::vector<int>>& truth,
                                    const std::vector<std::vector<int>>& est) {
    if (truth.size() != est.size())
        throw std::invalid_argument("contingency: membership lists differ in length");
    const int n = static_cast<int>(truth.size());
    std::map<int, int> trow, ecol;
    for (int i = 0; i < n; ++i) {
        if (truth[i].empty()) throw std::invalid_argument("point " + std::to_string(i) + " has no ground-truth cluster");
        if (est[i].empty()) throw std::invalid_argument("point " + std::to_string(i) + " has no estimated cluster");
        for (int c : truth[i]) trow.emplace(c, 0);
        for (int c : est[i]) ecol.emplace(c, 0);
    }
    ContingencyTable table;
    for (auto& [id, idx] : trow) {
        idx = static_cast<int>(table.truth_ids.size());
        table.truth_ids.push_back(id);
    }
    for (auto& [id, idx] : ecol) {
        idx = static_cast<int>(table.est_ids.size());
        table.est_ids.push_back(id);
    }
    table.T.assign(table.truth_ids.size(), std::vector<long long>(table.est_ids.size(), 0));
    table.truth_sizes.assign(table.truth_ids.size(), 0);
    table.est_sizes.assign(table.est_ids.size(), 0);
    for (int i = 0; i < n; ++i) {
        for (int tc : truth[i]) ++table.truth_sizes[trow[tc]];
        for (int ec : est[i]) ++table.est_sizes[ecol[ec]];
        for (int tc : truth[i])
            for (int ec : est[i]) ++table.T[trow[tc]][ecol[ec]];
    }
    return table;
}

/// Size-weighted best-match sensitivity and positive predictive value, and
/// their geometric mean.
inline ScoreTriple score(const ContingencyTable& table) {
    if (table.T.empty() || table.T.front().empty()) throw std::invalid_argument("score: empty contingency table");
    for (long long s : table.truth_sizes)
        if (s < 1) throw std::invalid_argument("score: zero-size ground-truth cluster");
    for (long long s : table.est_sizes)
        if (s < 1) throw std::invalid_argument("score: zero-size estimated cluster");

    long long truth_total = 0, best_row_sum = 0;
    for (size_t i = 0; i < table.T.size(); ++i) {
        truth_total += table.truth_sizes[i];
        best_row_sum += *std::max_element(table.T[i].begin(), table.T[i].end());
    }
    long long est_total = 0, best_col_sum = 0;
    for (size_t j = 0; j < table.est_sizes.size(); ++j) {
        est_total += table.est_sizes[j];
        long long best = 0;
        for (size_t i = 0; i < table.T.size(); ++i) best = std::max(best, table.T[i][j]);
        best_col_sum += best;
    }

    ScoreTriple out;
    out.sn = static_cast<double>(best_row_sum) / static_cast<double>(truth_total);
    out.ppv = static_cast<double>(best_col_sum) / static_cast<double>(est_total);
    out.accuracy = std::sqrt(out.sn * out.ppv);
    return out;
}

/// Single-membership convenience: one label per point on both sides.
inline ScoreTriple score_labels(const std::vector<int>& truth, const std::vector<int>& est) {
    std::vector<std::vector<int>> t(truth.size()), e(est.size());
    for (size_t i = 0; i < truth.size(); ++i) t[i] = {truth[i]};
    for (size_t i = 0; i < est.size(); ++i) e[i] = {est[i]};
    return score(contingency(t, e));
}

}  // namespace apx
