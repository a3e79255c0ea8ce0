#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hpcoef/series.hpp"

namespace hpcoef {

enum class SearchMode { structured, polynomial };

/// Best value found by a derivative-free multistart search. Reproducible
/// bit-for-bit for fixed (settings, seed).
struct SearchResult {
    double objective = 0.0;       ///< best normalized |a_k| found
    std::vector<cx> params;       ///< alphas (structured) or coefficients (polynomial)
    SearchMode mode = SearchMode::structured;
    int starts = 0;
    long long evals = 0;
    std::uint64_t seed = 0;
};

/// Knobs for the Nelder-Mead runs; defaults match the documented budgets.
struct SearchSettings {
    int evals_per_start = 20000;  ///< per start, across restarts
    int restarts = 6;             ///< simplex reinitializations at 0.1x scale
    double init_scale = 0.35;
    int quad_nodes = 1024;        ///< fixed-node quadrature inside polynomial search
};

/// Maximizes |sum_j b_j c_{k-j}| / ||h||^{2/p} over alphas in the polydisc
/// (radially clamped at 1 - 1e-6), with g, h in the structured family at the
/// given l. Coefficient-exact: no quadrature. Reported alphas are rotated so the
/// Cauchy-product sum is real positive.
SearchResult structured_search(int k, double p, int l, int n_starts, std::uint64_t seed,
                               const SearchSettings& settings = {});

/// Maximizes |a_k| / ||f||_{H^p} over free complex polynomials of degree m,
/// searching on the H^2 unit sphere; the final value is evaluated with adaptive
/// quadrature at quad_tol (NoConvergence propagates). Params hold f scaled to
/// ||f||_{H^p} = 1 with a_k real positive.
SearchResult polynomial_search(int k, double p, int degree, int n_starts, double quad_tol,
                               std::uint64_t seed, const SearchSettings& settings = {});

/// One row of a conjecture-probing scan.
struct ScanRow {
    int k = 0;
    double p = 0.0;
    int best_l = 0;
    double best_value = 0.0;
    std::optional<double> closed_form;
    std::optional<double> gap;  ///< closed_form - best_value when available
    bool zero_free = false;     ///< winning extremal has no zero in the closed disc
    bool a0_nonzero = false;    ///< winning extremal has f(0) != 0
};

struct ScanSettings {
    int starts_per_cell = 8;
    SearchSettings search{4000, 4, 0.35, 1024};
    std::uint64_t seed = 12345;
};

/// One row per (k, p): structured_search over every l, flags for the
/// nonvanishing and strict-monotonicity probes. Rows are ordered k-major.
std::vector<ScanRow> scan(int k_max, const std::vector<double>& p_grid,
                          const ScanSettings& settings = {});

}  // namespace hpcoef
