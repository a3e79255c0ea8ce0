#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hpcoef/errors.hpp"
#include "hpcoef/series.hpp"
#include "hpcoef/util.hpp"

using namespace hpcoef;

namespace {

// Independent multiplication oracle: evaluate both factors at roots of unity and
// invert the DFT by direct summation. Shares no code with cauchy_product.
Poly dft_multiply(const Poly& a, const Poly& b) {
    const int n = a.size_degree() + b.size_degree() + 1;
    std::vector<cx> values(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const cx w = std::polar(1.0, 2.0 * kPi * j / n);
        values[static_cast<std::size_t>(j)] = eval(a, w) * eval(b, w);
    }
    std::vector<cx> coeffs(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        cx acc{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            acc += values[static_cast<std::size_t>(j)] *
                   std::polar(1.0, -2.0 * kPi * j * m / n);
        }
        coeffs[static_cast<std::size_t>(m)] = acc / static_cast<double>(n);
    }
    return Poly(std::move(coeffs));
}

// Zero-free-in-the-closed-disc polynomial with h(0) = 1 exactly.
Poly random_outer_unit(std::mt19937_64& rng, int deg, double min_root = 1.15) {
    Poly h = Poly::one();
    for (int i = 0; i < deg; ++i) {
        const double m = min_root + 1.5 * uniform01(rng);
        const double a = 2.0 * kPi * uniform01(rng);
        const cx r = std::polar(m, a);
        h = multiply(h, Poly{cx{1.0, 0.0}, -1.0 / r});
    }
    return h;
}

}  // namespace

TEST_CASE("cauchy product basics") {
    const Poly one_plus_z{cx{1.0, 0.0}, cx{1.0, 0.0}};
    CHECK(cauchy_product(one_plus_z, one_plus_z, Truncation{2}) ==
          Poly{cx{1.0, 0.0}, cx{2.0, 0.0}, cx{1.0, 0.0}});

    const Poly p{cx{2.0, 1.0}, cx{0.0, -3.0}, cx{4.0, 0.0}, cx{1.0, 1.0}};
    CHECK(cauchy_product(Poly::one(), p, Truncation{2}) ==
          Poly{p.coeff(0), p.coeff(1), p.coeff(2)});
    CHECK(cauchy_product(Poly::one(), p, Truncation{5}) == p);
}

TEST_CASE("cauchy product against the DFT oracle (g * h^3 coefficient)") {
    const double b = std::sqrt(2.0 / 3.0);
    const Poly g{cx{1.0, 0.0}, cx{b, 0.0}, cx{1.0 / 3.0, 0.0}};
    const Poly h3 = multiply(multiply(g, g), g);
    const Poly via_cauchy = cauchy_product(g, h3, Truncation{2});
    const Poly via_dft = dft_multiply(g, h3);
    for (int n = 0; n <= 2; ++n) {
        CHECK(std::abs(via_cauchy.coeff(n) - via_dft.coeff(n)) < 1e-13);
    }
}

TEST_CASE("cauchy product is commutative and associative through truncation") {
    std::mt19937_64 rng(7001);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cx> ca(5), cb(4), cc(6);
        for (auto& v : ca) v = uniform_disc(rng, 2.0);
        for (auto& v : cb) v = uniform_disc(rng, 2.0);
        for (auto& v : cc) v = uniform_disc(rng, 2.0);
        const Poly a(ca), b(cb), c(cc);
        const Truncation t{7};
        CHECK(approx_equal(cauchy_product(a, b, t), cauchy_product(b, a, t), 1e-13));
        CHECK(approx_equal(cauchy_product(cauchy_product(a, b, t), c, t),
                           cauchy_product(a, cauchy_product(b, c, t), t), 1e-12));
    }
}

TEST_CASE("series_pow integer exponents") {
    const Poly h{cx{1.0, 0.0}, cx{1.0, 0.0}};
    CHECK(approx_equal(series_pow(h, 3.0, Truncation{3}),
                       Poly{cx{1.0, 0.0}, cx{3.0, 0.0}, cx{3.0, 0.0}, cx{1.0, 0.0}},
                       1e-14));

    // (1 + a1 z)(1 + a2 z) cubed, against direct expansion of the degree-6 product.
    const cx a1{0.3, 0.2}, a2{-0.1, 0.4};
    const Poly f = multiply(Poly{cx{1.0, 0.0}, a1}, Poly{cx{1.0, 0.0}, a2});
    const Poly direct = multiply(multiply(f, f), f);
    const Poly via_pow = series_pow(f, 3.0, Truncation{3});
    for (int n = 0; n <= 3; ++n) {
        CHECK(std::abs(via_pow.coeff(n) - direct.coeff(n)) < 1e-13);
    }
}

TEST_CASE("series_pow single factor matches the binomial expansion") {
    const cx alpha{0.35, -0.15};
    for (double q : {0.5, 1.7, 3.0, -1.25}) {
        const Poly got = series_pow(Poly{cx{1.0, 0.0}, alpha}, q, Truncation{2});
        CHECK(std::abs(got.coeff(0) - cx{1.0, 0.0}) < 1e-15);
        CHECK(std::abs(got.coeff(1) - q * alpha) < 1e-14);
        CHECK(std::abs(got.coeff(2) - binomial_general(q, 2) * alpha * alpha) < 1e-14);
    }
}

TEST_CASE("series_pow agrees with repeated products for integer exponents") {
    std::mt19937_64 rng(7002);
    for (int trial = 0; trial < 25; ++trial) {
        const int deg = 1 + static_cast<int>(rng() % 4);
        const Poly h = random_outer_unit(rng, deg);
        const int q = 2 + static_cast<int>(rng() % 4);
        Poly direct = Poly::one();
        for (int i = 0; i < q; ++i) direct = cauchy_product(direct, h, Truncation{12});
        const Poly via_pow = series_pow(h, static_cast<double>(q), Truncation{12});
        double scale = 0.0;
        for (const cx& v : direct.c) scale = std::max(scale, std::abs(v));
        for (int n = 0; n <= 12; ++n) {
            CHECK(std::abs(via_pow.coeff(n) - direct.coeff(n)) <= 1e-12 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("series_pow exponent additivity") {
    std::mt19937_64 rng(7003);
    for (int trial = 0; trial < 15; ++trial) {
        const Poly h = random_outer_unit(rng, 3);
        const double q1 = 0.3 + 2.7 * uniform01(rng);
        const double q2 = 0.3 + 2.7 * uniform01(rng);
        const Truncation t{10};
        const Poly lhs = series_pow(h, q1 + q2, t);
        const Poly rhs = cauchy_product(series_pow(h, q1, t), series_pow(h, q2, t), t);
        CHECK(approx_equal(lhs, rhs, 1e-10));
    }
}

TEST_CASE("series_pow error conditions") {
    CHECK_THROWS_AS(series_pow(Poly{cx{0.0, 0.0}, cx{1.0, 0.0}}, 2.0, Truncation{3}),
                    ZeroConstantTerm);
    CHECK_THROWS_AS(series_pow(Poly{cx{0.0, 1.0}, cx{1.0, 0.0}}, 2.0, Truncation{3}),
                    NonPositiveConstantTerm);
    CHECK_THROWS_AS(series_pow(Poly{cx{-1.0, 0.0}, cx{1.0, 0.0}}, 2.0, Truncation{3}),
                    NonPositiveConstantTerm);
}

TEST_CASE("binomial_general") {
    CHECK(binomial_general(3.0, 2) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(binomial_general(2.5, 0) == 1.0);
    CHECK(binomial_general(0.5, 2) == doctest::Approx(-0.125).epsilon(1e-15));
}

TEST_CASE("flip") {
    const cx a{0.3, 0.0}, b{-0.2, 0.5};
    const Poly g{a, b, cx{1.0, 0.0}};
    CHECK(flip(g, 2) == Poly{cx{1.0, 0.0}, b, a});
    CHECK(flip(Poly::one(), 3) == Poly{cx{0.0, 0.0}, cx{0.0, 0.0}, cx{0.0, 0.0}, cx{1.0, 0.0}});
    CHECK(flip(flip(g, 2), 2) == g);
    CHECK_THROWS_AS(flip(g, 1), DegreeTooHigh);
    // Trailing zeros do not count toward the degree.
    CHECK(flip(Poly{a, b, cx{0.0, 0.0}}, 1) == Poly{b, a});
}

TEST_CASE("conj_reflect") {
    const Poly p{cx{1.0, 0.0}, cx{0.0, 1.0}};
    CHECK(conj_reflect(p) == Poly{cx{1.0, 0.0}, cx{0.0, -1.0}});
    const Poly r{cx{2.0, 0.0}, cx{-1.0, 0.0}};
    CHECK(conj_reflect(r) == r);
    CHECK(conj_reflect(conj_reflect(p)) == p);
}

TEST_CASE("eval") {
    CHECK(eval(Poly{cx{1.0, 0.0}, cx{1.0, 0.0}}, cx{1.0, 0.0}) == cx{2.0, 0.0});
    const Poly p{cx{4.0, -2.0}, cx{3.0, 0.0}, cx{0.0, 1.0}};
    CHECK(eval(p, cx{0.0, 0.0}) == p.coeff(0));
    CHECK(std::abs(eval(Poly{cx{1.0, 0.0}, cx{2.0, 0.0}, cx{1.0, 0.0}}, cx{0.0, 1.0}) -
                   cx{0.0, 2.0}) < 1e-15);
}

TEST_CASE("poly equality pads with zeros") {
    CHECK(Poly{cx{1.0, 0.0}} == Poly{cx{1.0, 0.0}, cx{0.0, 0.0}});
    CHECK(Poly{cx{1.0, 0.0}} != Poly{cx{1.0, 0.0}, cx{0.0, 1.0}});
}
