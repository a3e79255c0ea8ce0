#include "hpcoef/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hpcoef/errors.hpp"

namespace hpcoef {

int math_degree(const Poly& p) {
    for (int n = p.size_degree(); n >= 0; --n) {
        if (p.c[static_cast<std::size_t>(n)] != cx{0.0, 0.0}) return n;
    }
    return -1;
}

bool operator==(const Poly& a, const Poly& b) {
    const int n = std::max(a.size_degree(), b.size_degree());
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) != b.coeff(i)) return false;
    }
    return true;
}

bool approx_equal(const Poly& a, const Poly& b, double tol) {
    const int n = std::max(a.size_degree(), b.size_degree());
    for (int i = 0; i <= n; ++i) {
        if (std::abs(a.coeff(i) - b.coeff(i)) > tol) return false;
    }
    return true;
}

Poly cauchy_product(const Poly& a, const Poly& b, Truncation t) {
    if (t.order < 0) throw DomainError("cauchy_product: truncation order must be >= 0");
    std::vector<cx> out(static_cast<std::size_t>(t.order) + 1, cx{0.0, 0.0});
    const int da = a.size_degree();
    for (int j = 0; j <= std::min(da, t.order); ++j) {
        const cx aj = a.c[static_cast<std::size_t>(j)];
        if (aj == cx{0.0, 0.0}) continue;
        const int top = std::min(b.size_degree(), t.order - j);
        for (int i = 0; i <= top; ++i) {
            out[static_cast<std::size_t>(j + i)] += aj * b.c[static_cast<std::size_t>(i)];
        }
    }
    return Poly(std::move(out));
}

Poly multiply(const Poly& a, const Poly& b) {
    return cauchy_product(a, b, Truncation{a.size_degree() + b.size_degree()});
}

Poly poly_from_roots(const std::vector<cx>& roots, cx lead) {
    Poly p{lead};
    for (const cx& r : roots) {
        p = multiply(p, Poly{-r, cx{1.0, 0.0}});
    }
    return p;
}

Poly series_pow(const Poly& h, double q, Truncation t) {
    if (t.order < 0) throw DomainError("series_pow: truncation order must be >= 0");
    const cx h0 = h.coeff(0);
    const double mag = std::abs(h0);
    if (mag == 0.0) throw ZeroConstantTerm("series_pow: h(0) = 0");
    if (std::abs(h0.imag()) > 1e-13 * mag || h0.real() <= 0.0) {
        throw NonPositiveConstantTerm("series_pow: h(0) must be real positive");
    }
    const double x0 = h0.real();
    std::vector<cx> c(static_cast<std::size_t>(t.order) + 1, cx{0.0, 0.0});
    c[0] = cx{std::pow(x0, q), 0.0};
    const int dh = h.size_degree();
    for (int n = 1; n <= t.order; ++n) {
        cx acc{0.0, 0.0};
        const int top = std::min(n, dh);
        for (int j = 1; j <= top; ++j) {
            acc += ((q + 1.0) * j - n) * h.c[static_cast<std::size_t>(j)] *
                   c[static_cast<std::size_t>(n - j)];
        }
        c[static_cast<std::size_t>(n)] = acc / (static_cast<double>(n) * x0);
    }
    return Poly(std::move(c));
}

double binomial_general(double q, int n) {
    if (n < 0) throw DomainError("binomial_general: n must be >= 0");
    double v = 1.0;
    for (int i = 0; i < n; ++i) {
        v *= (q - i) / (i + 1);
    }
    return v;
}

Poly flip(const Poly& g, int k) {
    if (k < 0) throw DomainError("flip: k must be >= 0");
    if (math_degree(g) > k) throw DegreeTooHigh("flip: deg g > k");
    std::vector<cx> out(static_cast<std::size_t>(k) + 1);
    for (int n = 0; n <= k; ++n) {
        out[static_cast<std::size_t>(n)] = g.coeff(k - n);
    }
    return Poly(std::move(out));
}

Poly conj_reflect(const Poly& h) {
    std::vector<cx> out(h.c.size());
    for (std::size_t i = 0; i < h.c.size(); ++i) out[i] = std::conj(h.c[i]);
    return Poly(std::move(out));
}

cx eval(const Poly& pol, cx z) {
    cx acc{0.0, 0.0};
    for (int n = pol.size_degree(); n >= 0; --n) {
        acc = acc * z + pol.c[static_cast<std::size_t>(n)];
    }
    return acc;
}

}  // namespace hpcoef
