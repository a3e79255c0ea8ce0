#pragma once

#include <optional>

namespace hpcoef {

/// Closed-form constant and upper-bound summary for one (k, p).
struct BoundReport {
    int k = 0;
    double p = 0.0;
    std::optional<double> closed_form;
    double hl_bound = 0.0;
    double dual_bound = 0.0;
    /// The dual bound assumes the embedding constant conjecture; it is known
    /// unconditionally only when 1/p is an integer.
    bool dual_bound_conditional = true;
    bool inv_p_is_integer = false;
    double monomial_lower = 1.0;
};

/// Known closed forms: the k=1 and k=2 formulas on 0<p<1, the k=3 value at
/// p equal to the double 2.0/3.0 (the CLI's exact-rational parse lands there),
/// and 1 for every k when p >= 1. Empty otherwise.
std::optional<double> closed_form_C(int k, double p);

/// Gamma-ratio bound Gamma(k/2+1/p) / (Gamma(k/2+1) Gamma(1/p)) for 0<p<1; the
/// even-k case uses the exact rising-factorial product.
double dual_bound(int k, double p);

/// Hardy-Littlewood form k^{1/p-1} C(1,p) for 0<p<1.
double hl_bound(int k, double p);

/// Aggregates the above and asserts monomial_lower <= closed_form <=
/// min(hl_bound, dual_bound) whenever the closed form is present; a violation
/// throws InvariantViolation (it would indicate an implementation bug).
BoundReport bounds_report(int k, double p);

}  // namespace hpcoef
