#include "hpcoef/bounds.hpp"

#include <cmath>

#include "hpcoef/errors.hpp"

namespace hpcoef {
namespace {

// (1 - p/2)^e via exp(e log1p(-p/2)); avoids cancellation as p -> 0.
double half_defect_pow(double p, double e) {
    return std::exp(e * std::log1p(-0.5 * p));
}

void require_p_open01(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("bounds: p must lie in (0,1)");
}

}  // namespace

std::optional<double> closed_form_C(int k, double p) {
    if (!(p > 0.0)) throw DomainError("closed_form_C: p must be > 0");
    if (k < 1) throw DomainError("closed_form_C: k must be >= 1");
    if (p >= 1.0) return 1.0;
    if (k == 1) {
        return std::sqrt(2.0 / p) * half_defect_pow(p, 1.0 / p - 0.5);
    }
    if (k == 2) {
        return (2.0 / p) * half_defect_pow(p, 2.0 / p - 1.0);
    }
    if (k == 3 && p == 2.0 / 3.0) {
        return std::sqrt(2.0 * (1103.0 + 33.0 * std::sqrt(33.0)) / 1153.0);
    }
    return std::nullopt;
}

double dual_bound(int k, double p) {
    require_p_open01(p);
    if (k < 0) throw DomainError("dual_bound: k must be >= 0");
    const double invp = 1.0 / p;
    if (k % 2 == 0) {
        // Gamma(m + x)/Gamma(x) = prod_{i<m} (x + i) with m = k/2.
        double v = 1.0;
        for (int i = 0; i < k / 2; ++i) {
            v *= (invp + i) / (i + 1.0);
        }
        return v;
    }
    return std::exp(std::lgamma(0.5 * k + invp) - std::lgamma(0.5 * k + 1.0) -
                    std::lgamma(invp));
}

double hl_bound(int k, double p) {
    require_p_open01(p);
    if (k < 1) throw DomainError("hl_bound: k must be >= 1");
    return std::pow(static_cast<double>(k), 1.0 / p - 1.0) * *closed_form_C(1, p);
}

BoundReport bounds_report(int k, double p) {
    require_p_open01(p);
    BoundReport r;
    r.k = k;
    r.p = p;
    r.closed_form = closed_form_C(k, p);
    r.hl_bound = hl_bound(k, p);
    r.dual_bound = dual_bound(k, p);
    r.dual_bound_conditional = true;
    const double invp = 1.0 / p;
    r.inv_p_is_integer = std::abs(invp - std::round(invp)) <= 1e-12;
    r.monomial_lower = 1.0;
    if (r.closed_form) {
        const double c = *r.closed_form;
        const double slack = 1e-12 * std::max(1.0, c);
        if (c < r.monomial_lower - slack || c > r.hl_bound + slack ||
            c > r.dual_bound + slack) {
            throw InvariantViolation("bounds_report: sandwich violated");
        }
    }
    return r;
}

}  // namespace hpcoef
