#include "hpcoef/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hpcoef/errors.hpp"

namespace hpcoef {
namespace {

// One-shot Horner giving p(z) and p'(z).
std::pair<cx, cx> eval_with_derivative(const std::vector<cx>& c, cx z) {
    cx p{0.0, 0.0};
    cx dp{0.0, 0.0};
    for (int n = static_cast<int>(c.size()) - 1; n >= 0; --n) {
        dp = dp * z + p;
        p = p * z + c[static_cast<std::size_t>(n)];
    }
    return {p, dp};
}

cx polish_root(const std::vector<cx>& c, cx z) {
    auto [p, dp] = eval_with_derivative(c, z);
    double best = std::abs(p);
    cx best_z = z;
    for (int it = 0; it < 12; ++it) {
        if (std::abs(dp) == 0.0) break;
        z -= p / dp;
        std::tie(p, dp) = eval_with_derivative(c, z);
        const double r = std::abs(p);
        if (r < best) {
            best = r;
            best_z = z;
        } else {
            break;
        }
    }
    return best_z;
}

}  // namespace

std::vector<cx> polynomial_roots(const Poly& pol) {
    double maxabs = 0.0;
    for (const cx& v : pol.c) maxabs = std::max(maxabs, std::abs(v));
    if (maxabs < 1e-300) throw DegenerateInput("polynomial_roots: all coefficients ~ 0");

    const double cut = 1e-14 * maxabs;
    int deg = pol.size_degree();
    while (deg > 0 && std::abs(pol.c[static_cast<std::size_t>(deg)]) <= cut) --deg;
    int low = 0;
    while (low < deg && std::abs(pol.c[static_cast<std::size_t>(low)]) <= cut) ++low;

    std::vector<cx> roots(static_cast<std::size_t>(low), cx{0.0, 0.0});
    const int d = deg - low;
    if (d <= 0) return roots;

    std::vector<cx> c(pol.c.begin() + low, pol.c.begin() + deg + 1);
    const cx lead = c.back();

    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) comp(i, i - 1) = cx{1.0, 0.0};
    for (int i = 0; i < d; ++i) {
        comp(i, d - 1) = -c[static_cast<std::size_t>(i)] / lead;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
    for (int i = 0; i < d; ++i) {
        roots.push_back(polish_root(c, solver.eigenvalues()(i)));
    }
    return roots;
}

}  // namespace hpcoef
