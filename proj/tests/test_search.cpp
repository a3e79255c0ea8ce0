#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hpcoef/candidates.hpp"
#include "hpcoef/errors.hpp"
#include "hpcoef/search.hpp"
#include "hpcoef/series.hpp"

using namespace hpcoef;

TEST_CASE("structured search finds the k=2 closed form at l=0") {
    const SearchResult r = structured_search(2, 0.5, 0, 8, 12345);
    CHECK(r.objective == doctest::Approx(27.0 / 16.0).epsilon(1e-8));
    // Reported parameters are rotated so the Cauchy-product sum is real positive.
    const Poly g = structured_g(r.params, 0);
    const Poly h = structured_h(r.params);
    const Poly c = series_pow(h, 3.0, Truncation{2});
    cx s{0.0, 0.0};
    for (int j = 0; j <= 2; ++j) s += g.coeff(j) * c.coeff(2 - j);
    CHECK(s.real() > 0.0);
    CHECK(std::abs(s.imag()) < 1e-8 * std::abs(s));
}

TEST_CASE("structured search reaches the k=1 family suprema") {
    for (double p : {0.35, 0.5, 0.75}) {
        // l = 0: the closed-form constant C(1, p).
        const double c1 = std::sqrt(2.0 / p) * std::pow(1.0 - 0.5 * p, 1.0 / p - 0.5);
        CHECK(structured_search(1, p, 0, 6, 7).objective ==
              doctest::Approx(c1).epsilon(1e-8));
        // l = 1: the family supremum is 2 (1 - p/2)^{1/p}, attained at
        // |alpha|^2 = 1/q (calculus on (1 + q s)/(1 + s)^{1/p}); the monomial
        // value 1 is only the flip-equation point.
        const double family_sup = 2.0 * std::pow(1.0 - 0.5 * p, 1.0 / p);
        const SearchResult r = structured_search(1, p, 1, 6, 7);
        CHECK(r.objective == doctest::Approx(family_sup).epsilon(1e-8));
        CHECK(r.objective >= 1.0 - 1e-12);
        CHECK(r.objective < c1);
    }
}

TEST_CASE("structured search respects the l=0 dominance at k=3, p=2/3") {
    const double c3 = std::sqrt(2.0 * (1103.0 + 33.0 * std::sqrt(33.0)) / 1153.0);
    double best = 0.0;
    int best_l = -1;
    for (int l = 0; l <= 3; ++l) {
        const double v = structured_search(3, 2.0 / 3.0, l, 8, 12345).objective;
        if (v > best) {
            best = v;
            best_l = l;
        }
    }
    CHECK(best_l == 0);
    CHECK(best == doctest::Approx(c3).epsilon(1e-7));
}

TEST_CASE("search results are deterministic given the seed") {
    const SearchResult a = structured_search(2, 0.6, 1, 4, 2024);
    const SearchResult b = structured_search(2, 0.6, 1, 4, 2024);
    CHECK(a.objective == b.objective);
    REQUIRE(a.params.size() == b.params.size());
    for (std::size_t i = 0; i < a.params.size(); ++i) {
        CHECK(a.params[i] == b.params[i]);
    }
    const SearchResult c = structured_search(2, 0.6, 1, 4, 2025);
    CHECK(c.objective == doctest::Approx(a.objective).epsilon(1e-6));
}

TEST_CASE("polynomial search on small cases") {
    {
        // Degenerate degree: no z^1 coefficient available.
        const SearchResult r = polynomial_search(1, 0.5, 0, 2, 1e-8, 5);
        CHECK(r.objective == doctest::Approx(0.0));
    }
    {
        // k=1, p=1/2: the extremal is the degree-4 polynomial (3/4)^2 (1+z/sqrt(3))^4.
        const double c1 = 2.0 * std::pow(0.75, 1.5);
        SearchSettings s;
        s.evals_per_start = 12000;
        const SearchResult r = polynomial_search(1, 0.5, 4, 8, 1e-10, 12345, s);
        CHECK(r.objective <= c1 + 1e-6);
        CHECK(r.objective >= c1 - 5e-4);
        // Params are H^p-normalized with a_k real positive.
        CHECK(r.params[1].real() > 0.0);
        CHECK(std::abs(r.params[1].imag()) < 1e-7);
    }
}

TEST_CASE("polynomial search objective is nondecreasing in the degree") {
    SearchSettings s;
    s.evals_per_start = 6000;
    double prev = 0.0;
    for (int m = 1; m <= 4; ++m) {
        // Loose final tolerance: a low-budget optimum may sit near a boundary
        // zero where |f|^p is only Hoelder and refinement is slow.
        const double v = polynomial_search(1, 0.5, m, 6, 1e-7, 99, s).objective;
        CHECK(v >= prev - 1e-6);
        prev = v;
    }
}

TEST_CASE("family suprema dominate the flip-equation candidate values") {
    const CandidateTable t = candidates_k2(0.5);
    for (int l = 0; l <= 2; ++l) {
        const double sup = structured_search(2, 0.5, l, 6, 17).objective;
        for (const auto& e : t.entries) {
            if (e.l == l && e.retained) {
                CHECK(sup >= e.value - 1e-7);
            }
        }
    }
}

TEST_CASE("sandwich: free polynomials cannot beat the structured family") {
    SearchSettings s;
    s.evals_per_start = 8000;
    const double poly = polynomial_search(2, 0.5, 6, 8, 1e-9, 31, s).objective;
    double structured = 0.0;
    for (int l = 0; l <= 2; ++l) {
        structured = std::max(structured, structured_search(2, 0.5, l, 6, 31).objective);
    }
    CHECK(poly <= structured + 1e-4);
}

TEST_CASE("scan emits one row per (k, p) with conjecture-consistent flags") {
    ScanSettings settings;
    settings.starts_per_cell = 4;
    settings.search = SearchSettings{2500, 3, 0.35, 1024};
    const auto rows = scan(2, {0.3, 0.5, 0.7}, settings);
    REQUIRE(rows.size() == 6);
    for (const auto& r : rows) {
        CHECK(r.best_l == 0);
        CHECK(r.zero_free);
        CHECK(r.a0_nonzero);
        CHECK(r.best_value >= 1.0);
        REQUIRE(r.closed_form.has_value());
        CHECK(*r.closed_form == doctest::Approx(r.best_value).epsilon(1e-6));
        CHECK(std::abs(*r.gap) < 1e-5);
    }
    // C(2,p) = C(1,p)^2 row-wise.
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rows[3 + i].best_value ==
              doctest::Approx(rows[i].best_value * rows[i].best_value).epsilon(1e-5));
    }
}

TEST_CASE("search input validation") {
    CHECK_THROWS_AS(structured_search(2, 1.2, 0, 4, 1), DomainError);
    CHECK_THROWS_AS(structured_search(2, 0.5, 3, 4, 1), DomainError);
    CHECK_THROWS_AS(polynomial_search(2, 0.5, -1, 4, 1e-8, 1), DomainError);
}
