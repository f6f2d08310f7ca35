// Exhaustive reference computations, independent of the engine code paths
// they check. Everything here enumerates binary variable settings directly
// against the factor definitions.
#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "apx/decision.hpp"
#include "apx/matrix.hpp"
#include "apx/random.hpp"

namespace oracle {

// Message from the relaxed row constraint (at least one selection, reward q
// per selection) to one variable, as the difference of the h=1 and h=0
// optima over all settings of the other row variables.
inline double eta_enumeration(const std::vector<double>& beta_others, double q) {
    const int L = static_cast<int>(beta_others.size());
    if (L > 20) throw std::invalid_argument("enumeration limited to small rows");
    double best1 = apx::kNegInf, best0 = apx::kNegInf;
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
        const int count = std::popcount(mask);
        double sum = 0.0;
        for (int k = 0; k < L; ++k)
            if (mask & (1u << k)) sum += beta_others[k];
        best1 = std::max(best1, q * (count + 1) + sum);
        if (count >= 1) best0 = std::max(best0, q * count + sum);
    }
    return best1 - best0;
}

// Message from the at-most-one-exemplar neighborhood constraint to one
// variable, as the difference of the h=1 and h=0 optima over all feasible
// settings of the other neighborhood members.
inline double psi_enumeration(const std::vector<double>& phi_others) {
    const int L = static_cast<int>(phi_others.size());
    if (L > 20) throw std::invalid_argument("enumeration limited to small neighborhoods");
    double best1 = apx::kNegInf, best0 = apx::kNegInf;
    for (unsigned mask = 0; mask < (1u << L); ++mask) {
        const int count = std::popcount(mask);
        double sum = 0.0;
        for (int k = 0; k < L; ++k)
            if (mask & (1u << k)) sum += phi_others[k];
        if (count + 1 <= 1) best1 = std::max(best1, sum);
        if (count <= 1) best0 = std::max(best0, sum);
    }
    return best1 - best0;
}

// Exhaustive optimum of the pairwise-similarity objective over all
// consistent assignments: every exemplar set E is scored with each
// non-exemplar joining its most similar exemplar. margin is the gap to the
// best differently-structured exemplar set (zero means a tie at the top).
struct ObjectiveSearch {
    double best = apx::kNegInf;
    double margin = 0.0;
};

inline ObjectiveSearch exhaustive_objective(const apx::SimilarityMatrix& s) {
    const int n = s.size();
    if (n > 20) throw std::invalid_argument("exhaustive search limited to small instances");
    ObjectiveSearch out;
    double second = apx::kNegInf;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        double obj = 0.0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                obj += s(i, i);
            } else {
                double m = apx::kNegInf;
                for (int k = 0; k < n; ++k)
                    if (mask & (1u << k)) m = std::max(m, s(i, k));
                obj += m;
            }
        }
        if (obj > out.best) {
            second = out.best;
            out.best = obj;
        } else if (obj > second) {
            second = obj;
        }
    }
    out.margin = out.best - second;
    return out;
}

inline double best_objective(const apx::SimilarityMatrix& s) { return exhaustive_objective(s).best; }

// Small instances on which the objective optimum is unique with a clear
// margin: one to three well-separated groups, none of size two (a symmetric
// pair leaves the exemplar choice exactly tied, which noise-free max-sum
// cannot resolve).
inline apx::SimilarityMatrix separated_instance(apx::Rng& rng, int variant_hint, int* n_out) {
    for (;;) {
        const int n = 3 + variant_hint % 3;
        std::vector<int> group(n, 0);
        if (variant_hint % 3 == 1) group[n - 1] = 1;
        if (variant_hint % 3 == 2 && n >= 5) {
            group[n - 1] = 1;
            group[n - 2] = 2;
        }
        bool sized_ok = true;
        for (int g = 0; g < 3; ++g) {
            const int c = static_cast<int>(std::count(group.begin(), group.end(), g));
            if (c == 2) sized_ok = false;
        }
        if (sized_ok) {
            std::vector<std::vector<double>> pts;
            for (int i = 0; i < n; ++i)
                pts.push_back({40.0 * group[i] + rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
            apx::SimilarityMatrix s(n, 0.0);
            for (int i = 0; i < n; ++i) {
                s(i, i) = -12.0;
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    const double dx = pts[i][0] - pts[j][0];
                    const double dy = pts[i][1] - pts[j][1];
                    s(i, j) = -std::sqrt(dx * dx + dy * dy);
                }
            }
            if (exhaustive_objective(s).margin >= 0.25) {
                *n_out = n;
                return s;
            }
        }
        ++variant_hint;
    }
}

// Objective value of a single-assignment clustering.
inline double objective_of(const apx::SimilarityMatrix& s, const apx::ClusteringResult& res) {
    double obj = 0.0;
    for (int i = 0; i < res.n; ++i) {
        if (res.exemplar_lists[i].size() != 1)
            throw std::invalid_argument("objective_of expects single-assignment results");
        obj += s(i, res.exemplar_lists[i].front());
    }
    return obj;
}

inline apx::SimilarityMatrix random_similarity(int n, apx::Rng& rng, double lo, double hi, double preference) {
    apx::SimilarityMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s(i, j) = i == j ? preference : rng.uniform(lo, hi);
    return s;
}

}  // namespace oracle
