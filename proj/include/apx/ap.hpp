#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "apx/matrix.hpp"
#include "apx/message_sweep.hpp"
#include "apx/params.hpp"

namespace apx {

/// Accumulated beliefs b_ij; thresholded at 0 for the binary decision.
struct BeliefMatrix {
    Matrix b;
    int size() const { return b.rows(); }
    double operator()(int i, int j) const { return b(i, j); }
};

struct ApMessageState {
    Matrix alpha;
    Matrix eta;
    long iteration = 0;

    explicit ApMessageState(int n) : alpha(n, n, 0.0), eta(n, n, 0.0) {}
    int size() const { return alpha.rows(); }
};

/// One synchronous sweep of the plain engine: eta from the current alpha,
/// then alpha from the fresh rho, both damped by lambda.
inline void ap_iterate(const SimilarityMatrix& s, ApMessageState& state, double lambda) {
    if (state.size() != s.size()) throw std::invalid_argument("ap_iterate: state does not match matrix size");
    detail::sweep(s, nullptr, nullptr, nullptr, state.alpha, state.eta, nullptr, nullptr, lambda);
    ++state.iteration;
}

inline BeliefMatrix ap_beliefs(const SimilarityMatrix& s, const ApMessageState& state) {
    const int n = s.size();
    BeliefMatrix bm{Matrix(n, n)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) bm.b(i, j) = s(i, j) + state.eta(i, j) + state.alpha(i, j);
    return bm;
}

/// Sign-structure checks; run after every sweep of every engine run.
inline void verify_ap_invariants(const ApMessageState& state) {
    const int n = state.size();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double a = state.alpha(i, j);
            if (std::isnan(a) || std::isnan(state.eta(i, j)))
                throw InvariantViolation("NaN message");
            if (i == j ? !(a >= 0.0) : !(a <= 0.0))
                throw InvariantViolation("alpha sign violation at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    }
}

namespace detail {

/// Iterate sweeps until the sign pattern of the diagonal beliefs holds for
/// `convergence_window` consecutive sweeps. SweepFn advances the state;
/// DiagFn(k) returns the current diagonal belief b_kk.
template <class SweepFn, class DiagFn>
ConvergenceStatus run_to_convergence(int n, const EngineParams& params, SweepFn&& do_sweep, DiagFn&& diag) {
    std::vector<char> prev_signs(n, -1), signs(n);
    ConvergenceStatus status;
    int streak = 0;
    for (int it = 0; it < params.max_iters; ++it) {
        do_sweep();
        ++status.iterations_run;
        for (int k = 0; k < n; ++k) signs[k] = diag(k) > 0.0 ? 1 : 0;
        streak = (signs == prev_signs) ? streak + 1 : 1;
        prev_signs = signs;
        status.stable_window = streak;
        if (streak >= params.convergence_window) {
            status.converged = true;
            break;
        }
    }
    return status;
}

}  // namespace detail

struct EngineRun {
    BeliefMatrix beliefs;
    ConvergenceStatus status;
};

/// Run the plain engine from zero-initialized messages.
inline EngineRun ap_run(const SimilarityMatrix& s, const EngineParams& params) {
    params.validate();
    const int n = s.size();
    ApMessageState state(n);
    auto status = detail::run_to_convergence(
        n, params,
        [&] {
            ap_iterate(s, state, params.damping);
            verify_ap_invariants(state);
        },
        [&](int k) { return s(k, k) + state.eta(k, k) + state.alpha(k, k); });
    return {ap_beliefs(s, state), status};
}

}  // namespace apx
