#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "apx/matrix.hpp"

namespace apx {

/// Epsilon-neighborhoods: members[j] = {k | s(j,k) > epsilon} ∪ {j}, sorted.
struct Neighborhoods {
    double epsilon = 0.0;
    std::vector<std::vector<int>> members;

    int size() const { return static_cast<int>(members.size()); }

    /// Total number of (i,j) pairs with i in members[j].
    long long total_members() const {
        long long t = 0;
        for (const auto& m : members) t += static_cast<long long>(m.size());
        return t;
    }
};

inline Neighborhoods build_neighborhoods(const SimilarityMatrix& s, double epsilon) {
    const int n = s.size();
    Neighborhoods nbr;
    nbr.epsilon = epsilon;
    nbr.members.resize(n);
    for (int j = 0; j < n; ++j) {
        auto& m = nbr.members[j];
        for (int k = 0; k < n; ++k) {
            if (k == j || s(j, k) > epsilon) m.push_back(k);
        }
    }
    return nbr;
}

/// Neighborhoods containing only the point itself, regardless of s.
inline Neighborhoods singleton_neighborhoods(int n) {
    Neighborhoods nbr;
    nbr.epsilon = kPosInf;
    nbr.members.resize(n);
    for (int j = 0; j < n; ++j) nbr.members[j] = {j};
    return nbr;
}

namespace detail {

/// Nearest-rank percentile over a multiset: the element of rank
/// ceil(X * m / 100) (1-based) in ascending order.
inline double nearest_rank_percentile(std::vector<double> values, double percentile) {
    if (values.empty()) throw std::invalid_argument("percentile of empty multiset");
    if (percentile <= 0.0 || percentile > 100.0)
        throw std::invalid_argument("percentile must be in (0, 100]");
    std::sort(values.begin(), values.end());
    const double m = static_cast<double>(values.size());
    long long rank = static_cast<long long>(std::ceil(percentile * m / 100.0));
    rank = std::max<long long>(1, std::min<long long>(rank, values.size()));
    return values[rank - 1];
}

}  // namespace detail

/// Penalty suggestion: negative of the X-percentile of the off-diagonal
/// similarity values, X in [90, 100].
inline double suggest_q(const SimilarityMatrix& s, double percentile) {
    if (s.size() < 2) throw std::invalid_argument("suggest_q: need at least 2 points");
    if (percentile < 90.0 || percentile > 100.0)
        throw std::invalid_argument("suggest_q: percentile must be in [90, 100]");
    return -detail::nearest_rank_percentile(s.off_diagonal(), percentile);
}

/// Neighborhood-threshold suggestion: the X-percentile of the off-diagonal
/// similarity values, X in [95, 100].
inline double suggest_epsilon(const SimilarityMatrix& s, double percentile) {
    if (s.size() < 2) throw std::invalid_argument("suggest_epsilon: need at least 2 points");
    if (percentile < 95.0 || percentile > 100.0)
        throw std::invalid_argument("suggest_epsilon: percentile must be in [95, 100]");
    return detail::nearest_rank_percentile(s.off_diagonal(), percentile);
}

}  // namespace apx
