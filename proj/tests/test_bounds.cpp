#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hpcoef/bounds.hpp"
#include "hpcoef/errors.hpp"
#include "hpcoef/util.hpp"

using namespace hpcoef;

TEST_CASE("closed forms") {
    CHECK(*closed_form_C(2, 0.5) == doctest::Approx(27.0 / 16.0).epsilon(1e-14));
    CHECK(*closed_form_C(5, 1.3) == doctest::Approx(1.0));
    CHECK(*closed_form_C(3, 2.0 / 3.0) == doctest::Approx(1.4973).epsilon(1e-4));
    CHECK_FALSE(closed_form_C(3, 0.5).has_value());
    CHECK_FALSE(closed_form_C(4, 0.5).has_value());
    CHECK_THROWS_AS(closed_form_C(2, 0.0), DomainError);
}

TEST_CASE("closed forms approach 1 as p -> 1^-") {
    const double p = 1.0 - 1e-8;
    CHECK(*closed_form_C(1, p) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(*closed_form_C(2, p) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("dual bound") {
    for (double p : {0.1, 0.37, 0.5, 0.9}) {
        CHECK(dual_bound(2, p) * p == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(dual_bound(3, 2.0 / 3.0) == doctest::Approx(16.0 / (3.0 * kPi)).epsilon(1e-13));
    CHECK(dual_bound(0, 0.5) == doctest::Approx(1.0));
    CHECK_THROWS_AS(dual_bound(2, 1.5), DomainError);
}

TEST_CASE("Hardy-Littlewood bound") {
    for (double p : {0.2, 0.5, 0.8}) {
        CHECK(hl_bound(1, p) == doctest::Approx(*closed_form_C(1, p)).epsilon(1e-14));
    }
    CHECK(hl_bound(2, 0.5) == doctest::Approx(4.0 * std::pow(0.75, 1.5)).epsilon(1e-13));
    const double hl323 = hl_bound(3, 2.0 / 3.0);
    CHECK(hl323 == doctest::Approx(std::sqrt(3.0) * *closed_form_C(1, 2.0 / 3.0)).epsilon(1e-13));
    CHECK(hl323 > 1.4973);
}

TEST_CASE("bound report sandwich") {
    for (int k = 1; k <= 4; ++k) {
        for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const BoundReport r = bounds_report(k, p);
            CHECK(r.monomial_lower == 1.0);
            CHECK(r.dual_bound_conditional);
            if (r.closed_form) {
                CHECK(*r.closed_form >= 1.0 - 1e-12);
                CHECK(*r.closed_form <= r.dual_bound * (1.0 + 1e-12));
                CHECK(*r.closed_form <= r.hl_bound * (1.0 + 1e-12));
            }
        }
    }
    const BoundReport r = bounds_report(3, 2.0 / 3.0);
    REQUIRE(r.closed_form.has_value());
    CHECK(*r.closed_form <= r.dual_bound);
    CHECK(*r.closed_form <= r.hl_bound);
    CHECK_FALSE(bounds_report(4, 0.5).closed_form.has_value());
}

TEST_CASE("1/p integer flag") {
    CHECK(bounds_report(2, 0.5).inv_p_is_integer);
    CHECK(bounds_report(2, 0.25).inv_p_is_integer);
    CHECK_FALSE(bounds_report(2, 0.3).inv_p_is_integer);
}
