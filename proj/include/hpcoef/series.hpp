#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "hpcoef/util.hpp"

namespace hpcoef {

/// Truncation order for series operations: coefficients of z^0..z^order are kept.
struct Truncation {
    int order = 0;
};

/// Finite complex coefficient sequence; c[n] is the coefficient of z^n.
/// The sequence is never empty. Trailing zeros are allowed: the stored length is
/// representational, the mathematical degree ignores them.
struct Poly {
    std::vector<cx> c{cx{0.0, 0.0}};

    Poly() = default;
    Poly(std::initializer_list<cx> coeffs) : c(coeffs) {
        if (c.empty()) c.assign(1, cx{0.0, 0.0});
    }
    explicit Poly(std::vector<cx> coeffs) : c(std::move(coeffs)) {
        if (c.empty()) c.assign(1, cx{0.0, 0.0});
    }

    static Poly one() { return Poly{cx{1.0, 0.0}}; }
    static Poly monomial(int n, cx coeff = cx{1.0, 0.0}) {
        std::vector<cx> v(static_cast<std::size_t>(n) + 1, cx{0.0, 0.0});
        v.back() = coeff;
        return Poly(std::move(v));
    }

    /// Representational degree (length - 1).
    int size_degree() const { return static_cast<int>(c.size()) - 1; }

    /// Coefficient of z^n, zero beyond the stored length.
    cx coeff(int n) const {
        if (n < 0 || n >= static_cast<int>(c.size())) return {0.0, 0.0};
        return c[static_cast<std::size_t>(n)];
    }
};

/// Largest index with a (exactly) nonzero coefficient; -1 for the zero polynomial.
int math_degree(const Poly& p);

/// Coefficient-wise equality up to the longer length with zero padding.
bool operator==(const Poly& a, const Poly& b);
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

/// Coefficient-wise comparison with absolute tolerance, zero-padded.
bool approx_equal(const Poly& a, const Poly& b, double tol);

/// Product truncated to t.order: coefficient n of the result is
/// sum_{j=0}^{n} a_j b_{n-j}.
Poly cauchy_product(const Poly& a, const Poly& b, Truncation t);

/// Exact (untruncated) polynomial product.
Poly multiply(const Poly& a, const Poly& b);

/// Monic-free product of the factors (z - r) over the given roots, scaled by lead.
Poly poly_from_roots(const std::vector<cx>& roots, cx lead = cx{1.0, 0.0});

/// Coefficients of h(z)^q through t.order by the power-of-a-series recurrence
///   n h_0 c_n = sum_{j=1}^{min(n, deg h)} ((q+1) j - n) h_j c_{n-j},  c_0 = h_0^q.
/// Requires h(0) on the positive real axis so c_0 takes the principal branch;
/// throws ZeroConstantTerm / NonPositiveConstantTerm otherwise.
Poly series_pow(const Poly& h, double q, Truncation t);

/// Generalized binomial coefficient q(q-1)...(q-n+1)/n!; 1 at n = 0.
double binomial_general(double q, int n);

/// Index reversal: coefficient n of the result is coefficient (k-n) of g.
/// Throws DegreeTooHigh if the mathematical degree of g exceeds k.
Poly flip(const Poly& g, int k);

/// Coefficient-wise complex conjugation.
Poly conj_reflect(const Poly& h);

/// Horner evaluation at z.
cx eval(const Poly& pol, cx z);

}  // namespace hpcoef
