#include "hpcoef/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "hpcoef/bounds.hpp"
#include "hpcoef/candidates.hpp"
#include "hpcoef/errors.hpp"
#include "hpcoef/hardy.hpp"
#include "hpcoef/util.hpp"

namespace hpcoef {
namespace {

constexpr double kAlphaClamp = 1.0 - 1e-6;

struct NelderMeadResult {
    std::vector<double> x;
    double fval = 0.0;
    long long evals = 0;
};

// Standard Nelder-Mead with deterministic tie-breaking; minimizes fn.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& fn,
                             std::vector<double> x0, double scale, long long max_evals,
                             double ftol) {
    const std::size_t n = x0.size();
    struct Vertex {
        std::vector<double> x;
        double f;
    };
    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    long long evals = 0;
    auto eval_at = [&](const std::vector<double>& x) {
        ++evals;
        return fn(x);
    };
    simplex.push_back({x0, eval_at(x0)});
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> v = x0;
        v[i] += scale;
        simplex.push_back({v, eval_at(v)});
    }
    auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    };
    order();

    while (evals < max_evals) {
        if (simplex.back().f - simplex.front().f < ftol) break;
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t v = 0; v < n; ++v) centroid[i] += simplex[v].x[i];
            centroid[i] /= static_cast<double>(n);
        }
        auto blend = [&](double t) {
            std::vector<double> v(n);
            for (std::size_t i = 0; i < n; ++i) {
                v[i] = centroid[i] + t * (centroid[i] - simplex.back().x[i]);
            }
            return v;
        };
        const std::vector<double> xr = blend(1.0);
        const double fr = eval_at(xr);
        if (fr < simplex.front().f) {
            const std::vector<double> xe = blend(2.0);
            const double fe = eval_at(xe);
            if (fe < fr) {
                simplex.back() = {xe, fe};
            } else {
                simplex.back() = {xr, fr};
            }
        } else if (fr < simplex[n - 1].f) {
            simplex.back() = {xr, fr};
        } else {
            const bool outside = fr < simplex.back().f;
            const std::vector<double> xc = blend(outside ? 0.5 : -0.5);
            const double fc = eval_at(xc);
            if (fc < std::min(fr, simplex.back().f)) {
                simplex.back() = {xc, fc};
            } else {
                for (std::size_t v = 1; v <= n; ++v) {
                    for (std::size_t i = 0; i < n; ++i) {
                        simplex[v].x[i] =
                            simplex[0].x[i] + 0.5 * (simplex[v].x[i] - simplex[0].x[i]);
                    }
                    simplex[v].f = eval_at(simplex[v].x);
                }
            }
        }
        order();
    }
    return {simplex.front().x, simplex.front().f, evals};
}

// Minimization with restart-on-stall: the simplex is reinitialized at the best
// point with a 0.1x scale until the budget runs out or progress stops.
NelderMeadResult nm_with_restarts(const std::function<double(const std::vector<double>&)>& fn,
                                  std::vector<double> x0, double scale, long long budget,
                                  int restarts) {
    NelderMeadResult best{std::move(x0), 0.0, 0};
    best.fval = fn(best.x);
    long long used = 1;
    double s = scale;
    for (int r = 0; r <= restarts && used < budget; ++r) {
        NelderMeadResult run =
            nelder_mead(fn, best.x, s, (budget - used) / std::max(1, restarts + 1 - r), 1e-14);
        used += run.evals;
        const double gain = best.fval - run.fval;
        if (run.fval < best.fval) {
            best.x = run.x;
            best.fval = run.fval;
        }
        if (gain < 1e-13 && r > 0) break;
        s *= 0.1;
    }
    best.evals = used;
    return best;
}

std::vector<cx> alphas_from_vec(const std::vector<double>& x) {
    std::vector<cx> alphas(x.size() / 2);
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        cx a{x[2 * j], x[2 * j + 1]};
        const double m = std::abs(a);
        if (m > kAlphaClamp) a *= kAlphaClamp / m;
        alphas[j] = a;
    }
    return alphas;
}

// Cauchy-product sum S = sum_j b_j c_{k-j} for the structured family.
cx structured_sum(const std::vector<cx>& alphas, int l, int k, double q) {
    const Poly g = structured_g(alphas, l);
    const Poly h = structured_h(alphas);
    const Poly c = series_pow(h, q, Truncation{k});
    cx s{0.0, 0.0};
    for (int j = 0; j <= k; ++j) {
        s += g.coeff(j) * c.coeff(k - j);
    }
    return s;
}

double structured_objective(const std::vector<cx>& alphas, int l, int k, double p,
                            double q) {
    const cx s = structured_sum(alphas, l, k, q);
    const double hn = h2_norm_sq(structured_h(alphas));
    return std::abs(s) * std::pow(hn, -1.0 / p);
}

// Fixed-node boundary mean of |f|^p; cheap inner loop of the polynomial search.
double quad_mean_p_fixed(const Poly& f, double p, int nodes) {
    KahanSum acc;
    for (int j = 0; j < nodes; ++j) {
        const double theta = 2.0 * kPi * j / nodes;
        acc.add(std::pow(std::abs(eval(f, cx{std::cos(theta), std::sin(theta)})), p));
    }
    return acc.value() / nodes;
}

}  // namespace

SearchResult structured_search(int k, double p, int l, int n_starts, std::uint64_t seed,
                               const SearchSettings& settings) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("structured_search: p must lie in (0,1)");
    if (l < 0 || l > k) throw DomainError("structured_search: l must lie in 0..k");
    if (n_starts < 1) throw DomainError("structured_search: n_starts must be >= 1");
    const double q = 2.0 / p - 1.0;

    auto objective = [&](const std::vector<double>& x) {
        return -structured_objective(alphas_from_vec(x), l, k, p, q);
    };

    std::vector<NelderMeadResult> runs(static_cast<std::size_t>(n_starts));
    parallel_for(static_cast<std::size_t>(n_starts), [&](std::size_t s) {
        std::mt19937_64 rng(mix_seed(seed, s));
        std::vector<double> x0(2 * static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            const cx a = uniform_disc(rng, 0.8);
            x0[static_cast<std::size_t>(2 * j)] = a.real();
            x0[static_cast<std::size_t>(2 * j) + 1] = a.imag();
        }
        runs[s] = nm_with_restarts(objective, std::move(x0), settings.init_scale,
                                   settings.evals_per_start, settings.restarts);
    });

    // Deterministic reduction: objective first, then lexicographic parameters.
    std::size_t best = 0;
    long long total_evals = 0;
    for (std::size_t s = 0; s < runs.size(); ++s) {
        total_evals += runs[s].evals;
        if (runs[s].fval < runs[best].fval ||
            (runs[s].fval == runs[best].fval && runs[s].x < runs[best].x)) {
            best = s;
        }
    }

    std::vector<cx> alphas = alphas_from_vec(runs[best].x);
    // Rotate so the Cauchy-product sum is real positive (flat direction removed
    // after the fact; for l = k the sum is rotation-invariant).
    if (k > l) {
        const cx s = structured_sum(alphas, l, k, q);
        if (std::abs(s) > 0.0) {
            const double theta = std::arg(s) / static_cast<double>(k - l);
            const cx rot = std::polar(1.0, theta);
            for (cx& a : alphas) a *= rot;
        }
    }

    SearchResult r;
    r.objective = -runs[best].fval;
    r.params = std::move(alphas);
    r.mode = SearchMode::structured;
    r.starts = n_starts;
    r.evals = total_evals;
    r.seed = seed;
    return r;
}

SearchResult polynomial_search(int k, double p, int degree, int n_starts, double quad_tol,
                               std::uint64_t seed, const SearchSettings& settings) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("polynomial_search: p must lie in (0,1)");
    if (degree < 0) throw DomainError("polynomial_search: degree must be >= 0");
    if (n_starts < 1) throw DomainError("polynomial_search: n_starts must be >= 1");

    const std::size_t dim = 2 * (static_cast<std::size_t>(degree) + 1);
    auto poly_from_vec = [&](const std::vector<double>& x) {
        // H^2 unit sphere representative.
        double nrm = 0.0;
        for (double v : x) nrm += v * v;
        nrm = std::sqrt(nrm);
        std::vector<cx> c(static_cast<std::size_t>(degree) + 1);
        if (nrm == 0.0) {
            c[0] = cx{1.0, 0.0};
        } else {
            for (std::size_t j = 0; j < c.size(); ++j) {
                c[j] = cx{x[2 * j] / nrm, x[2 * j + 1] / nrm};
            }
        }
        return Poly(std::move(c));
    };
    auto objective = [&](const std::vector<double>& x) {
        const Poly f = poly_from_vec(x);
        const double ak = std::abs(f.coeff(k));
        if (ak == 0.0) return 0.0;
        const double mean_p = quad_mean_p_fixed(f, p, settings.quad_nodes);
        return -ak / std::pow(mean_p, 1.0 / p);
    };

    std::vector<NelderMeadResult> runs(static_cast<std::size_t>(n_starts));
    parallel_for(static_cast<std::size_t>(n_starts), [&](std::size_t s) {
        std::mt19937_64 rng(mix_seed(seed ^ 0x706f6c79ULL, s));
        std::vector<double> x0(dim);
        for (double& v : x0) v = 2.0 * uniform01(rng) - 1.0;
        runs[s] = nm_with_restarts(objective, std::move(x0), settings.init_scale,
                                   settings.evals_per_start, settings.restarts);
    });

    std::size_t best = 0;
    long long total_evals = 0;
    for (std::size_t s = 0; s < runs.size(); ++s) {
        total_evals += runs[s].evals;
        if (runs[s].fval < runs[best].fval ||
            (runs[s].fval == runs[best].fval && runs[s].x < runs[best].x)) {
            best = s;
        }
    }

    Poly f = poly_from_vec(runs[best].x);
    // Exact H^p normalization of the reported value and parameters.
    FactoredFunction wrapped;
    wrapped.g = f;
    wrapped.h = Poly::one();
    wrapped.q = 1.0;
    wrapped.A = 1.0;
    const NormEstimate est = hp_norm(wrapped, p, quad_tol);
    if (!est.converged) {
        throw NoConvergence("polynomial_search: quadrature did not converge",
                            est.value, est.err_estimate, est.samples);
    }
    const cx ak = f.coeff(k);
    const double value = std::abs(ak) / est.value;
    const cx phase = std::abs(ak) > 0.0 ? std::conj(ak) / std::abs(ak) : cx{1.0, 0.0};
    for (cx& v : f.c) v *= phase / est.value;

    SearchResult r;
    r.objective = value;
    r.params = f.c;
    r.mode = SearchMode::polynomial;
    r.starts = n_starts;
    r.evals = total_evals;
    r.seed = seed;
    return r;
}

std::vector<ScanRow> scan(int k_max, const std::vector<double>& p_grid,
                          const ScanSettings& settings) {
    if (k_max < 1) throw DomainError("scan: k_max must be >= 1");
    for (double p : p_grid) {
        if (!(p > 0.0 && p < 1.0)) throw DomainError("scan: p grid must lie in (0,1)");
    }
    const std::size_t cells = static_cast<std::size_t>(k_max) * p_grid.size();
    std::vector<ScanRow> rows(cells);
    parallel_for(cells, [&](std::size_t cell) {
        const int k = static_cast<int>(cell / p_grid.size()) + 1;
        const std::size_t pi = cell % p_grid.size();
        const double p = p_grid[pi];

        ScanRow row;
        row.k = k;
        row.p = p;
        double best_val = -1.0;
        SearchResult best_sr;
        for (int l = 0; l <= k; ++l) {
            const std::uint64_t cell_seed =
                mix_seed(settings.seed, cell * 16 + static_cast<std::size_t>(l));
            SearchResult sr = structured_search(k, p, l, settings.starts_per_cell,
                                                cell_seed, settings.search);
            if (sr.objective > best_val) {
                best_val = sr.objective;
                row.best_l = l;
                best_sr = std::move(sr);
            }
        }
        row.best_value = best_val;
        row.closed_form = closed_form_C(k, p);
        if (row.closed_form) row.gap = *row.closed_form - row.best_value;
        const Poly g = structured_g(best_sr.params, row.best_l);
        row.zero_free = zeros_in_closed_disc(g, 0.0).empty();
        cx a0{1.0, 0.0};
        for (int j = 0; j < row.best_l; ++j) a0 *= best_sr.params[static_cast<std::size_t>(j)];
        row.a0_nonzero = std::abs(a0) > 1e-8;
        rows[cell] = std::move(row);
    });
    return rows;
}

}  // namespace hpcoef
