#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <vector>

#include "apx/matrix.hpp"
#include "apx/neighborhood.hpp"

namespace apx::detail {

// One synchronous sweep of the max-sum message system, shared by the plain
// and the extended engine. Update order: beta/eta, then phi/psi and the
// aggregate F, then rho/alpha. Downstream steps read the freshly damped
// stored values of the current sweep.
//
// Plain AP is the special case nbr == nullptr (no exclusion constraints,
// psi/F absent) and q == nullptr (penalty -inf everywhere). The extended
// engine with singleton neighborhoods and q = -inf then performs the exact
// same arithmetic, which keeps the reduction bit-exact.
//
// Conventions: a max over an empty index set is -inf. A row with no
// alternative exemplars (n == 1) yields eta = max(0, q_i), so a lone
// point's self-belief stays s(0,0).
inline void sweep(const SimilarityMatrix& s,
                  const Neighborhoods* nbr,
                  const std::vector<size_t>* psi_offset,
                  const double* q,
                  Matrix& alpha,
                  Matrix& eta,
                  std::vector<double>* psi,
                  std::vector<double>* F,
                  double lambda) {
    const int n = s.size();
    const double lam = lambda;
    const double rem = 1.0 - lambda;

    // beta_ij = s_ij + alpha_ij (+ F_i on the diagonal);
    // eta_ij = max(-max_{k != j} beta_ik, q_i), via row-wise top-two maxima.
    for (int i = 0; i < n; ++i) {
        const double qi = q ? q[i] : kNegInf;
        double max1 = kNegInf, max2 = kNegInf;
        int arg1 = -1;
        const double* srow = s.values.row(i);
        const double* arow = alpha.row(i);
        for (int k = 0; k < n; ++k) {
            double b = srow[k] + arow[k];
            if (F && k == i) b += (*F)[i];
            if (b > max1) {
                max2 = max1;
                max1 = b;
                arg1 = k;
            } else if (b > max2) {
                max2 = b;
            }
        }
        double* erow = eta.row(i);
        for (int j = 0; j < n; ++j) {
            const double m = (j == arg1) ? max2 : max1;
            const double fresh = (m == kNegInf) ? std::max(0.0, qi) : std::max(-m, qi);
            // clamp keeps eta >= q_i exact under damping
            erow[j] = std::max(lam * erow[j] + rem * fresh, qi);
        }
    }

    // phi_lj = s_ll + alpha_ll + eta_ll + F_l - psi_lj for l in the
    // neighborhood of j; psi_ij = -max(0, max_{l != i} phi_lj); then F is
    // recomputed exactly from the damped psi.
    if (nbr) {
        std::vector<double> diag(n);
        for (int l = 0; l < n; ++l) diag[l] = s(l, l) + alpha(l, l) + eta(l, l) + (*F)[l];
        for (int j = 0; j < n; ++j) {
            const auto& mem = nbr->members[j];
            const size_t base = (*psi_offset)[j];
            double max1 = kNegInf, max2 = kNegInf;
            int arg1 = -1;
            for (size_t t = 0; t < mem.size(); ++t) {
                const double phi = diag[mem[t]] - (*psi)[base + t];
                if (phi > max1) {
                    max2 = max1;
                    max1 = phi;
                    arg1 = static_cast<int>(t);
                } else if (phi > max2) {
                    max2 = phi;
                }
            }
            for (size_t t = 0; t < mem.size(); ++t) {
                const double m = (static_cast<int>(t) == arg1) ? max2 : max1;
                const double fresh = -std::max(0.0, m);
                (*psi)[base + t] = lam * (*psi)[base + t] + rem * fresh;
            }
        }
        std::fill(F->begin(), F->end(), 0.0);
        for (int j = 0; j < n; ++j) {
            const auto& mem = nbr->members[j];
            const size_t base = (*psi_offset)[j];
            for (size_t t = 0; t < mem.size(); ++t) (*F)[mem[t]] += (*psi)[base + t];
        }
    }

    // rho_kj = s_kj + eta_kj (+ F_k on the diagonal); alpha column-wise with
    // the positive-part sum computed once per column. Columns are processed
    // in tiles so each row of s and eta is still read sequentially.
    constexpr int kTile = 64;
    std::vector<double> sum_pos(std::min(n, kTile));
    std::vector<double> rho_diag(std::min(n, kTile));
    for (int j0 = 0; j0 < n; j0 += kTile) {
        const int jl = std::min(n, j0 + kTile);
        std::fill(sum_pos.begin(), sum_pos.end(), 0.0);
        for (int k = 0; k < n; ++k) {
            const double* srow = s.values.row(k);
            const double* erow = eta.row(k);
            for (int j = j0; j < jl; ++j) {
                double rho = srow[j] + erow[j];
                if (F && k == j) rho += (*F)[k];
                if (k == j)
                    rho_diag[j - j0] = rho;
                else
                    sum_pos[j - j0] += std::max(0.0, rho);
            }
        }
        for (int i = 0; i < n; ++i) {
            const double* srow = s.values.row(i);
            const double* erow = eta.row(i);
            double* arow = alpha.row(i);
            for (int j = j0; j < jl; ++j) {
                double fresh;
                if (i == j) {
                    fresh = sum_pos[j - j0];
                } else {
                    const double rho_ij = srow[j] + erow[j];
                    fresh = std::min(0.0, rho_diag[j - j0] + (sum_pos[j - j0] - std::max(0.0, rho_ij)));
                }
                arow[j] = lam * arow[j] + rem * fresh;
            }
        }
    }

#ifndef NDEBUG
    for (double x : alpha.data()) assert(!std::isnan(x));
    for (double x : eta.data()) assert(!std::isnan(x));
    if (psi)
        for (double x : *psi) assert(!std::isnan(x));
#endif
}

}  // namespace apx::detail
