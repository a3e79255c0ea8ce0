#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hpcoef/candidates.hpp"
#include "hpcoef/series.hpp"

namespace hpcoef {

/// The flip-equation system lambda z^k g(1/z) = conj-reflected h^q + O(z^{k+1})
/// at fixed (k, p, l). The gauge constrains the product of the alphas with j > l
/// (lambda when l = k) to the real axis. When enforce_blaschke_domain is set,
/// iterates with |alpha_j| > 1 + 1e-9 for j <= l abort with left_domain; clearing
/// it lets multistart census every algebraic branch, including ones that violate
/// the Blaschke bound and end up flagged rejected.
struct FlipSystem {
    int k = 1;
    double p = 0.5;
    double q = 3.0;  ///< 2/p - 1
    int l = 0;
    bool enforce_blaschke_domain = true;
};

/// Validates 0 < p < 1 and 0 <= l <= k, and fills in q.
FlipSystem make_flip_system(int k, double p, int l);

/// Residual entries r_n = lambda g_{k-n} - conj(c_n), n = 0..k, with g, h built
/// from the alphas (A_1 = A_2 = 1) and c the coefficients of h^q.
std::vector<cx> flip_residual(const FlipSystem& sys, const std::vector<cx>& alphas,
                              cx lambda);

/// Sup norm of the flip residual; convenience for validation.
double flip_residual_sup(const FlipSystem& sys, const std::vector<cx>& alphas, cx lambda);

enum class SolveStatus { converged, diverged, left_domain };

struct SolveReport {
    std::optional<StructuredCandidate> candidate;
    int iterations = 0;
    double final_residual = 0.0;  ///< augmented 2-norm at exit
    int starts_tried = 1;
    SolveStatus status = SolveStatus::diverged;
};

/// Damped least-squares Newton (Levenberg-Marquardt) on the real-ified residual
/// augmented with one real gauge equation Im(gauge quantity) = 0; the real part
/// is made nonnegative by a sign-flip rotation on convergence. Converged iff the
/// augmented residual norm <= tol.
SolveReport solve(const FlipSystem& sys, std::vector<cx> alphas0, cx lambda0,
                  int max_iter = 200, double tol = 1e-11);

/// Deterministic seeded multistart; returns the distinct converged reports,
/// merged by gauge_distance > 1e-6 and sorted on canonical parameters. Every
/// converged candidate is validated through candidate_value.
std::vector<SolveReport> solve_multistart(const FlipSystem& sys, int n_starts,
                                          std::uint64_t seed, int max_iter = 200,
                                          double tol = 1e-11);

}  // namespace hpcoef
