#pragma once

#include <stdexcept>
#include <vector>

#include "apx/matrix.hpp"

namespace apx {

struct EngineParams {
    double preference = 0.0;
    double q = kNegInf;            // penalty per additional exemplar; -inf recovers plain AP
    double epsilon = kPosInf;      // neighborhood threshold (EAP)
    double preference2 = 0.0;      // second-layer preference (SHAPE)
    double damping = 0.5;
    int max_iters = 1000;
    int convergence_window = 25;

    void validate() const {
        if (!(damping >= 0.0 && damping < 1.0)) throw std::invalid_argument("damping must be in [0, 1)");
        if (convergence_window < 1) throw std::invalid_argument("convergence window must be >= 1");
        if (max_iters < convergence_window) throw std::invalid_argument("max_iters must be >= convergence window");
    }
};

/// Per-point penalty q_i; a constant q when there is no side information.
struct PenaltyVector {
    std::vector<double> q;

    PenaltyVector() = default;
    PenaltyVector(int n, double value) : q(n, value) {}

    int size() const { return static_cast<int>(q.size()); }
    double operator[](int i) const { return q[i]; }
};

struct ConvergenceStatus {
    bool converged = false;
    int iterations_run = 0;
    int stable_window = 0;  // consecutive sweeps with an unchanged exemplar sign pattern
};

/// Raised when a message-state sign invariant is violated after a sweep.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace apx
