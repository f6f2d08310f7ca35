#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "apx/ap.hpp"
#include "apx/matrix.hpp"
#include "apx/message_sweep.hpp"
#include "apx/neighborhood.hpp"
#include "apx/params.hpp"

namespace apx {

/// Message state of the extended engine. psi is stored flat, aligned with
/// the neighborhood member lists: psi_{i,j} for i = members[j][t] lives at
/// psi[psi_offset[j] + t]. F_i is the exact sum of psi_ij over all j whose
/// neighborhood contains i.
struct EapMessageState {
    Matrix alpha;
    Matrix eta;
    std::vector<double> psi;
    std::vector<size_t> psi_offset;  // n + 1 entries
    std::vector<double> F;
    long iteration = 0;

    EapMessageState(int n, const Neighborhoods& nbr) : alpha(n, n, 0.0), eta(n, n, 0.0), F(n, 0.0) {
        if (nbr.size() != n) throw std::invalid_argument("neighborhoods do not match matrix size");
        psi_offset.resize(n + 1, 0);
        for (int j = 0; j < n; ++j) psi_offset[j + 1] = psi_offset[j] + nbr.members[j].size();
        psi.assign(psi_offset[n], 0.0);
    }

    int size() const { return alpha.rows(); }

    /// psi_{i,j}; i must lie in the neighborhood of j.
    double psi_at(const Neighborhoods& nbr, int i, int j) const {
        const auto& mem = nbr.members[j];
        const auto it = std::lower_bound(mem.begin(), mem.end(), i);
        if (it == mem.end() || *it != i)
            throw std::invalid_argument("psi requested outside neighborhood: point " + std::to_string(i) +
                                        " not in neighborhood of " + std::to_string(j));
        return psi[psi_offset[j] + static_cast<size_t>(it - mem.begin())];
    }
};

/// Number of defined psi messages, i.e. the sum of all neighborhood sizes.
inline long long count_defined_psi(const Neighborhoods& nbr) { return nbr.total_members(); }

/// One synchronous sweep of the extended engine (beta/eta, phi/psi and F,
/// rho/alpha); stored eta, psi, alpha are damped, F is recomputed exactly
/// from the damped psi.
inline void eap_iterate(const SimilarityMatrix& s, const Neighborhoods& nbr, const PenaltyVector& q,
                        EapMessageState& state, double lambda) {
    const int n = s.size();
    if (state.size() != n || nbr.size() != n || q.size() != n)
        throw std::invalid_argument("eap_iterate: dimension mismatch");
    detail::sweep(s, &nbr, &state.psi_offset, q.q.data(), state.alpha, state.eta, &state.psi, &state.F, lambda);
    ++state.iteration;
}

inline BeliefMatrix eap_beliefs(const SimilarityMatrix& s, const EapMessageState& state) {
    const int n = s.size();
    BeliefMatrix bm{Matrix(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) bm.b(i, j) = s(i, j) + state.eta(i, j) + state.alpha(i, j);
    for (int i = 0; i < n; ++i) bm.b(i, i) += state.F[i];
    return bm;
}

/// Sign-structure checks (alpha as in AP, eta clipped at q, psi and F
/// non-positive, F an exact sum of psi); run after every sweep.
inline void verify_eap_invariants(const EapMessageState& state, const Neighborhoods& nbr, const PenaltyVector& q) {
    const int n = state.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double a = state.alpha(i, j);
            const double e = state.eta(i, j);
            if (std::isnan(a) || std::isnan(e)) throw InvariantViolation("NaN message");
            if (i == j ? !(a >= 0.0) : !(a <= 0.0))
                throw InvariantViolation("alpha sign violation at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (!(e >= q[i])) throw InvariantViolation("eta below q at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
    std::vector<double> f(n, 0.0);
    for (int j = 0; j < n; ++j) {
        const auto& mem = nbr.members[j];
        const size_t base = state.psi_offset[j];
        for (size_t t = 0; t < mem.size(); ++t) {
            const double p = state.psi[base + t];
            if (std::isnan(p) || !(p <= 0.0)) throw InvariantViolation("psi sign violation");
            f[mem[t]] += p;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (!(state.F[i] <= 0.0)) throw InvariantViolation("F sign violation");
        if (f[i] != state.F[i]) throw InvariantViolation("F is not the exact sum of psi");
    }
}

/// Run the extended engine from zero-initialized messages with per-point
/// penalties. Beliefs carry the F term on the diagonal only.
inline EngineRun eap_run(const SimilarityMatrix& s, const Neighborhoods& nbr, const PenaltyVector& q,
                         const EngineParams& params) {
    params.validate();
    const int n = s.size();
    if (q.size() != n) throw std::invalid_argument("eap_run: penalty vector size mismatch");
    EapMessageState state(n, nbr);
    auto status = detail::run_to_convergence(
        n, params,
        [&] {
            eap_iterate(s, nbr, q, state, params.damping);
            verify_eap_invariants(state, nbr, q);
        },
        [&](int k) { return s(k, k) + state.eta(k, k) + state.alpha(k, k) + state.F[k]; });
    return {eap_beliefs(s, state), status};
}

/// Constant-penalty convenience overload; q is taken from params.
inline EngineRun eap_run(const SimilarityMatrix& s, const Neighborhoods& nbr, const EngineParams& params) {
    return eap_run(s, nbr, PenaltyVector(s.size(), params.q), params);
}

}  // namespace apx
