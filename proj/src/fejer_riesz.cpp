#include "hpcoef/fejer_riesz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hpcoef/errors.hpp"
#include "hpcoef/roots.hpp"

namespace hpcoef {
namespace {

constexpr int kGridNodes = 4096;
constexpr double kCircleSnap = 1e-7;
constexpr double kPairTol = 1e-7;
constexpr double kClusterAngle = 1e-6;

double wrap_angle(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a < -kPi) a += 2.0 * kPi;
    return a;
}

// Pairs sorted circle angles into adjacent clusters of two; tries both parities
// (including the wraparound pair) and keeps the feasible grouping with the
// smaller worst gap. Returns one representative angle per pair.
std::vector<double> pair_circle_angles(std::vector<double> angles) {
    const std::size_t m = angles.size();
    if (m % 2 != 0) throw PairingFailure("spectral_factor: odd circle-root count");
    if (m == 0) return {};
    std::sort(angles.begin(), angles.end());

    auto grouping = [&](std::size_t offset, std::vector<double>& reps) -> double {
        double worst = 0.0;
        reps.clear();
        for (std::size_t i = 0; i < m; i += 2) {
            const double a = angles[(i + offset) % m];
            const double b = angles[(i + 1 + offset) % m];
            const double gap = std::abs(wrap_angle(b - a));
            worst = std::max(worst, gap);
            reps.push_back(a + 0.5 * wrap_angle(b - a));
        }
        return worst;
    };

    std::vector<double> reps0, reps1;
    const double w0 = grouping(0, reps0);
    const double w1 = grouping(1, reps1);
    const double best = std::min(w0, w1);
    if (best > kClusterAngle) {
        throw PairingFailure("spectral_factor: circle roots do not cluster into even multiplicities");
    }
    return w0 <= w1 ? reps0 : reps1;
}

}  // namespace

double TrigPoly::eval(double theta) const {
    // a_0 + 2 Re sum_{n>=1} a_n e^{i n theta}
    double v = coef(0).real();
    const cx w{std::cos(theta), std::sin(theta)};
    cx wn{1.0, 0.0};
    for (int n = 1; n <= k; ++n) {
        wn *= w;
        v += 2.0 * (coef(n) * wn).real();
    }
    return v;
}

double TrigPoly::sup_norm_grid(int nodes) const {
    double m = 0.0;
    for (int j = 0; j < nodes; ++j) {
        m = std::max(m, std::abs(eval(2.0 * kPi * j / nodes)));
    }
    return m;
}

TrigPoly make_trig_poly(std::vector<cx> full_coeffs) {
    if (full_coeffs.empty() || full_coeffs.size() % 2 == 0) {
        throw DomainError("make_trig_poly: coefficient row must have odd length");
    }
    TrigPoly q;
    q.k = static_cast<int>(full_coeffs.size() / 2);
    q.a = std::move(full_coeffs);
    double maxabs = 0.0;
    for (const cx& v : q.a) maxabs = std::max(maxabs, std::abs(v));
    const double tol = 1e-12 * std::max(1.0, maxabs);
    for (int n = 0; n <= q.k; ++n) {
        if (std::abs(q.coef(-n) - std::conj(q.coef(n))) > tol) {
            throw DomainError("make_trig_poly: Hermitian symmetry violated");
        }
    }
    return q;
}

TrigPoly modulus_squared(const Poly& pol) {
    const int k = pol.size_degree();
    std::vector<cx> row(static_cast<std::size_t>(2 * k) + 1, cx{0.0, 0.0});
    for (int n = 0; n <= k; ++n) {
        cx acc{0.0, 0.0};
        for (int j = 0; j + n <= k; ++j) {
            acc += pol.coeff(j + n) * std::conj(pol.coeff(j));
        }
        row[static_cast<std::size_t>(k + n)] = acc;
        row[static_cast<std::size_t>(k - n)] = std::conj(acc);
    }
    TrigPoly q;
    q.k = k;
    q.a = std::move(row);
    return q;
}

Poly spectral_factor(const TrigPoly& Q, double tol) {
    double maxabs = 0.0;
    for (const cx& v : Q.a) maxabs = std::max(maxabs, std::abs(v));
    if (maxabs < 1e-300) throw DegenerateInput("spectral_factor: Q ~ 0");

    double grid_min = std::numeric_limits<double>::infinity();
    double grid_max = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < kGridNodes; ++j) {
        const double v = Q.eval(2.0 * kPi * j / kGridNodes);
        grid_min = std::min(grid_min, v);
        grid_max = std::max(grid_max, v);
    }
    if (grid_min < -tol) throw NotNonnegative("spectral_factor: Q negative on grid");

    int keff = 0;
    for (int n = Q.k; n >= 1; --n) {
        if (std::abs(Q.coef(n)) > 1e-13 * maxabs) {
            keff = n;
            break;
        }
    }
    if (keff == 0) {
        return Poly{cx{std::sqrt(std::max(Q.coef(0).real(), 0.0)), 0.0}};
    }

    // Laurent symbol z^keff Q(z), a polynomial of degree 2 keff with nonzero
    // leading and trailing coefficients.
    std::vector<cx> r(static_cast<std::size_t>(2 * keff) + 1);
    for (int n = 0; n <= 2 * keff; ++n) {
        r[static_cast<std::size_t>(n)] = Q.coef(n - keff);
    }
    const std::vector<cx> roots = polynomial_roots(Poly(r));
    if (static_cast<int>(roots.size()) != 2 * keff) {
        throw PairingFailure("spectral_factor: unexpected root count of the Laurent symbol");
    }

    std::vector<double> circle_angles;
    std::vector<cx> inside, outside;
    for (const cx& w : roots) {
        const double m = std::abs(w);
        if (std::abs(m - 1.0) <= kCircleSnap) {
            circle_angles.push_back(std::arg(w));
        } else if (m < 1.0) {
            inside.push_back(w);
        } else {
            outside.push_back(w);
        }
    }
    if (inside.size() != outside.size()) {
        throw PairingFailure("spectral_factor: inside/outside root counts differ");
    }
    std::vector<bool> used(inside.size(), false);
    for (const cx& w : outside) {
        const cx target = 1.0 / std::conj(w);
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < inside.size(); ++i) {
            if (used[i]) continue;
            const double d = std::abs(inside[i] - target);
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        if (best > kPairTol * std::max(1.0, std::abs(target))) {
            throw PairingFailure("spectral_factor: no reflection partner within tolerance");
        }
        used[best_i] = true;
    }

    std::vector<cx> p_roots = outside;
    for (double a : pair_circle_angles(std::move(circle_angles))) {
        p_roots.push_back(cx{std::cos(a), std::sin(a)});
    }

    Poly p0 = poly_from_roots(p_roots);
    const double mean0 = modulus_squared(p0).coef(0).real();
    const double scale = Q.coef(0).real() / mean0;
    if (!(scale > 0.0)) throw PairingFailure("spectral_factor: nonpositive scale");
    Poly p = p0;
    const double s = std::sqrt(scale);
    for (cx& v : p.c) v *= s;

    const cx p00 = p.coeff(0);
    if (std::abs(p00) == 0.0) throw PairingFailure("spectral_factor: P(0) = 0");
    const cx phase = std::conj(p00) / std::abs(p00);
    for (cx& v : p.c) v *= phase;

    // Reconstruction check on the same grid; failure signals Q negative between
    // nodes or ill-conditioned pairing.
    const TrigPoly back = modulus_squared(p);
    double err = 0.0;
    for (int j = 0; j < kGridNodes; ++j) {
        const double theta = 2.0 * kPi * j / kGridNodes;
        err = std::max(err, std::abs(back.eval(theta) - Q.eval(theta)));
    }
    const double allow = std::max(1e-9 * std::max(grid_max, 1e-300),
                                  4.0 * std::max(0.0, -grid_min));
    if (err > allow) {
        throw PairingFailure("spectral_factor: |P|^2 does not reproduce Q");
    }
    return p;
}

}  // namespace hpcoef
