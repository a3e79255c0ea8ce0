#pragma once

#include <cstdint>
#include <vector>

#include "hpcoef/series.hpp"

namespace hpcoef {

/// Result of a boundary quadrature H^p quasi-norm evaluation.
struct NormEstimate {
    double value = 0.0;          ///< the quasi-norm ||f||_{H^p}
    double p = 0.0;              ///< exponent
    std::uint32_t samples = 0;   ///< quadrature nodes at the final level (power of two)
    double err_estimate = 0.0;   ///< |value^p difference| between the last two levels
    bool converged = false;      ///< target tolerance met before the node cap
};

/// f = A * g * h^q with h zero-free on the closed unit disc and q = 2/p - 1.
struct FactoredFunction {
    Poly g;
    Poly h = Poly::one();
    double q = 1.0;
    double A = 1.0;
};

/// Throws DomainError when the FactoredFunction invariants fail (q <= 0, A <= 0,
/// or h has a root of modulus <= 1 + 1e-9).
void validate(const FactoredFunction& f);

/// Boundary quadrature of value^p = mean_j |f(e^{2 pi i j / N})|^p with N doubled
/// from 2^10 until successive levels differ by less than target_tol or N = 2^20.
/// Moduli enter as A |g| |h|^q, so no fractional complex powers are taken. When
/// g or h has a root within 1e-6 of the circle the schedule starts at 2^18.
/// Never throws on non-convergence: the estimate is returned with converged=false.
NormEstimate hp_norm(const FactoredFunction& f, double p, double target_tol);

/// Parseval: sum of squared coefficient moduli.
double h2_norm_sq(const Poly& pol);

/// Residuals of the factorization norm identities.
struct NormIdentityReport {
    bool ok = false;
    double resid_h = 0.0;     ///< | value^p - A^p ||h||^2 |
    double resid_g = 0.0;     ///< | value^p - A^p ||g||^2 | when comparable
    bool g_comparable = false;  ///< |g| = |h| held on the circle to 1e-9
    NormEstimate estimate;
};

/// Checks |hp_norm(f,p)^p - A^p h2_norm_sq(h)| <= tol, and the same against g
/// when |g| = |h| on the circle.
NormIdentityReport check_norm_identities(const FactoredFunction& f, double p, double tol);

/// Roots of pol with modulus <= 1 + tol. Throws DegenerateInput when every
/// coefficient is below 1e-300.
std::vector<cx> zeros_in_closed_disc(const Poly& pol, double tol);

}  // namespace hpcoef
