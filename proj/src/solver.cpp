#include "hpcoef/solver.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "hpcoef/errors.hpp"

namespace hpcoef {
namespace {

constexpr double kBlaschkeBound = 1.0 + 1e-9;
constexpr double kDivergedBound = 1e8;

cx gauge_quantity(const FlipSystem& sys, const std::vector<cx>& alphas, cx lambda) {
    if (sys.l == sys.k) return lambda;
    cx g{1.0, 0.0};
    for (int j = sys.l; j < sys.k; ++j) g *= alphas[static_cast<std::size_t>(j)];
    return g;
}

// Unknowns are the 2k+2 reals [Re a_1, Im a_1, .., Re a_k, Im a_k, Re l, Im l].
void unpack(const Eigen::VectorXd& x, std::vector<cx>& alphas, cx& lambda) {
    const int k = static_cast<int>(alphas.size());
    for (int j = 0; j < k; ++j) {
        alphas[static_cast<std::size_t>(j)] = cx{x(2 * j), x(2 * j + 1)};
    }
    lambda = cx{x(2 * k), x(2 * k + 1)};
}

Eigen::VectorXd residual_vec(const FlipSystem& sys, const Eigen::VectorXd& x) {
    std::vector<cx> alphas(static_cast<std::size_t>(sys.k));
    cx lambda;
    unpack(x, alphas, lambda);
    const std::vector<cx> r = flip_residual(sys, alphas, lambda);
    Eigen::VectorXd f(2 * (sys.k + 1) + 1);
    for (int n = 0; n <= sys.k; ++n) {
        f(2 * n) = r[static_cast<std::size_t>(n)].real();
        f(2 * n + 1) = r[static_cast<std::size_t>(n)].imag();
    }
    f(2 * (sys.k + 1)) = gauge_quantity(sys, alphas, lambda).imag();
    return f;
}

bool in_blaschke_domain(const FlipSystem& sys, const Eigen::VectorXd& x) {
    if (!sys.enforce_blaschke_domain) return true;
    for (int j = 0; j < sys.l; ++j) {
        if (std::hypot(x(2 * j), x(2 * j + 1)) > kBlaschkeBound) return false;
    }
    return true;
}

}  // namespace

FlipSystem make_flip_system(int k, double p, int l) {
    if (k < 1) throw DomainError("FlipSystem: k must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw DomainError("FlipSystem: p must lie in (0,1)");
    if (l < 0 || l > k) throw DomainError("FlipSystem: l must lie in 0..k");
    FlipSystem sys;
    sys.k = k;
    sys.p = p;
    sys.q = 2.0 / p - 1.0;
    sys.l = l;
    return sys;
}

std::vector<cx> flip_residual(const FlipSystem& sys, const std::vector<cx>& alphas,
                              cx lambda) {
    if (static_cast<int>(alphas.size()) != sys.k) {
        throw DomainError("flip_residual: expected k alphas");
    }
    const Poly g = structured_g(alphas, sys.l);
    const Poly h = structured_h(alphas);
    const Poly c = series_pow(h, sys.q, Truncation{sys.k});
    std::vector<cx> r(static_cast<std::size_t>(sys.k) + 1);
    for (int n = 0; n <= sys.k; ++n) {
        r[static_cast<std::size_t>(n)] =
            lambda * g.coeff(sys.k - n) - std::conj(c.coeff(n));
    }
    return r;
}

double flip_residual_sup(const FlipSystem& sys, const std::vector<cx>& alphas,
                         cx lambda) {
    double m = 0.0;
    for (const cx& v : flip_residual(sys, alphas, lambda)) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

SolveReport solve(const FlipSystem& sys, std::vector<cx> alphas0, cx lambda0,
                  int max_iter, double tol) {
    const int nx = 2 * sys.k + 2;
    Eigen::VectorXd x(nx);
    for (int j = 0; j < sys.k; ++j) {
        x(2 * j) = alphas0[static_cast<std::size_t>(j)].real();
        x(2 * j + 1) = alphas0[static_cast<std::size_t>(j)].imag();
    }
    x(2 * sys.k) = lambda0.real();
    x(2 * sys.k + 1) = lambda0.imag();

    SolveReport rep;
    if (!in_blaschke_domain(sys, x)) {
        rep.status = SolveStatus::left_domain;
        return rep;
    }

    Eigen::VectorXd f = residual_vec(sys, x);
    double cost = f.squaredNorm();
    double mu = -1.0;

    for (int iter = 0; iter < max_iter; ++iter) {
        rep.iterations = iter + 1;
        if (std::sqrt(cost) <= tol) break;

        // Forward-difference Jacobian.
        Eigen::MatrixXd J(f.size(), nx);
        for (int i = 0; i < nx; ++i) {
            const double step = 1e-7 * std::max(1.0, std::abs(x(i)));
            Eigen::VectorXd xs = x;
            xs(i) += step;
            J.col(i) = (residual_vec(sys, xs) - f) / step;
        }
        const Eigen::MatrixXd jtj = J.transpose() * J;
        const Eigen::VectorXd jtf = J.transpose() * f;
        if (mu < 0.0) mu = 1e-3 * std::max(jtj.diagonal().maxCoeff(), 1e-12);

        bool accepted = false;
        for (int attempt = 0; attempt < 40 && !accepted; ++attempt) {
            Eigen::MatrixXd a = jtj;
            for (int i = 0; i < nx; ++i) {
                a(i, i) += mu * std::max(jtj(i, i), 1e-12);
            }
            const Eigen::VectorXd delta = a.ldlt().solve(-jtf);
            Eigen::VectorXd xt = x + delta;
            if (!in_blaschke_domain(sys, xt)) {
                // One backtrack before giving up on the domain.
                xt = x + 0.5 * delta;
                if (!in_blaschke_domain(sys, xt)) {
                    rep.status = SolveStatus::left_domain;
                    rep.final_residual = std::sqrt(cost);
                    return rep;
                }
            }
            const Eigen::VectorXd ft = residual_vec(sys, xt);
            const double ct = ft.squaredNorm();
            if (ct < cost) {
                x = xt;
                f = ft;
                cost = ct;
                mu = std::max(mu / 3.0, 1e-14);
                accepted = true;
            } else {
                mu *= 4.0;
                if (mu > 1e14) break;
            }
        }
        if (!accepted) break;
        if (x.cwiseAbs().maxCoeff() > kDivergedBound) {
            rep.status = SolveStatus::diverged;
            rep.final_residual = std::sqrt(cost);
            return rep;
        }
    }

    rep.final_residual = std::sqrt(cost);
    if (rep.final_residual > tol) {
        rep.status = SolveStatus::diverged;
        return rep;
    }
    rep.status = SolveStatus::converged;

    std::vector<cx> alphas(static_cast<std::size_t>(sys.k));
    cx lambda;
    unpack(x, alphas, lambda);

    // The all-zero configuration is a degenerate root: the residual reaches the
    // alphas only through elementary symmetric functions, so the iterate keeps
    // O(tol^{1/k}) dust there. Snap tiny components onto zero when doing so does
    // not hurt the residual.
    {
        std::vector<cx> snapped = alphas;
        bool any = false;
        for (cx& a : snapped) {
            if (a != cx{0.0, 0.0} && std::abs(a) < 1e-3) {
                a = cx{0.0, 0.0};
                any = true;
            }
        }
        if (any) {
            double rs = gauge_quantity(sys, snapped, lambda).imag();
            rs *= rs;
            for (const cx& r : flip_residual(sys, snapped, lambda)) rs += std::norm(r);
            rs = std::sqrt(rs);
            if (rs <= std::max(rep.final_residual, 0.5 * tol)) {
                alphas = std::move(snapped);
                rep.final_residual = rs;
            }
        }
    }

    // The gauge equation pinned Im(G) = 0; flip the sign by rotation if the real
    // part came out negative.
    if (sys.l < sys.k) {
        const cx g = gauge_quantity(sys, alphas, lambda);
        if (g.real() < 0.0) {
            const double theta = kPi / static_cast<double>(sys.k - sys.l);
            const cx rot = std::polar(1.0, -theta);
            for (cx& a : alphas) a *= rot;
            lambda *= std::polar(1.0, -theta * static_cast<double>(sys.k - sys.l));
        }
    }

    StructuredCandidate c;
    c.k = sys.k;
    c.p = sys.p;
    c.l = sys.l;
    c.alphas = std::move(alphas);
    c.lambda = lambda;
    c.branch_label = "solver";
    c.retained = true;
    for (int j = 0; j < sys.k; ++j) {
        const double m = std::abs(c.alphas[static_cast<std::size_t>(j)]);
        if ((j < sys.l && m >= 1.0 - 1e-12) || m > 1.0 + 1e-12) {
            c.retained = false;
            c.reject_reason = "alpha_" + std::to_string(j + 1) + " outside the disc bound";
            break;
        }
    }
    c.value = candidate_value(c);
    rep.candidate = std::move(c);
    return rep;
}

std::vector<SolveReport> solve_multistart(const FlipSystem& sys, int n_starts,
                                          std::uint64_t seed, int max_iter, double tol) {
    if (n_starts < 1) throw DomainError("solve_multistart: n_starts must be >= 1");
    std::vector<SolveReport> distinct;
    for (int s = 0; s < n_starts; ++s) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
        std::vector<cx> a0(static_cast<std::size_t>(sys.k));
        for (auto& a : a0) a = uniform_disc(rng, 0.95);
        const cx g0 = gauge_quantity(sys, a0, cx{1.0, 0.0});
        double l0 = 1.0;
        if (sys.l < sys.k && std::abs(g0) > 0.0) {
            l0 = std::clamp(1.0 / std::abs(g0), 0.1, 10.0);
        }
        SolveReport rep = solve(sys, std::move(a0), cx{l0, 0.0}, max_iter, tol);
        if (rep.status != SolveStatus::converged) continue;
        bool fresh = true;
        for (const SolveReport& seen : distinct) {
            if (gauge_distance(sys.k, sys.l, seen.candidate->alphas, seen.candidate->lambda,
                               rep.candidate->alphas, rep.candidate->lambda) <= 1e-6) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            rep.starts_tried = s + 1;
            distinct.push_back(std::move(rep));
        }
    }
    std::sort(distinct.begin(), distinct.end(),
              [&](const SolveReport& a, const SolveReport& b) {
                  const auto ca = canonical_params(sys.k, sys.l, a.candidate->alphas,
                                                   a.candidate->lambda);
                  const auto cb = canonical_params(sys.k, sys.l, b.candidate->alphas,
                                                   b.candidate->lambda);
                  for (std::size_t i = 0; i < ca.size(); ++i) {
                      if (ca[i].real() != cb[i].real()) return ca[i].real() < cb[i].real();
                      if (ca[i].imag() != cb[i].imag()) return ca[i].imag() < cb[i].imag();
                  }
                  return false;
              });
    return distinct;
}

}  // namespace hpcoef
