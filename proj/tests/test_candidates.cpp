#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hpcoef/candidates.hpp"
#include "hpcoef/errors.hpp"
#include "hpcoef/hardy.hpp"
#include "hpcoef/series.hpp"
#include "hpcoef/util.hpp"

using namespace hpcoef;

namespace {

const StructuredCandidate& by_label(const CandidateTable& t, const std::string& label) {
    for (const auto& e : t.entries) {
        if (e.branch_label == label) return e;
    }
    throw std::runtime_error("no branch " + label);
}

}  // namespace

TEST_CASE("candidates_k1") {
    {
        const CandidateTable t = candidates_k1(0.5);
        const StructuredCandidate& best = t.entries[t.best];
        CHECK(best.l == 0);
        CHECK(std::abs(best.alphas[0] - cx{std::sqrt(1.0 / 3.0), 0.0}) < 1e-15);
        CHECK(best.value == doctest::Approx(2.0 * std::pow(0.75, 1.5)).epsilon(1e-13));
        CHECK(by_label(t, "l1").value == doctest::Approx(1.0));
    }
    // Continuity endpoint p -> 1^-.
    const CandidateTable t = candidates_k1(1.0 - 1e-8);
    CHECK(t.entries[t.best].value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(candidates_k1(1.0), DomainError);
    CHECK_THROWS_AS(candidates_k1(0.0), DomainError);
}

TEST_CASE("candidates_k2 at p = 1/2") {
    const CandidateTable t = candidates_k2(0.5);
    const StructuredCandidate& best = t.entries[t.best];
    CHECK(best.l == 0);
    CHECK(best.branch_label == "l0");
    CHECK(best.value == doctest::Approx(27.0 / 16.0).epsilon(1e-13));
    CHECK(std::abs(best.lambda - cx{3.0, 0.0}) < 1e-13);
    // alpha_1 alpha_2 = 1/3 and alpha_1 + alpha_2 = sqrt(2/3).
    CHECK(std::abs(best.alphas[0] * best.alphas[1] - cx{1.0 / 3.0, 0.0}) < 1e-14);
    CHECK(std::abs(best.alphas[0] + best.alphas[1] - cx{std::sqrt(2.0 / 3.0), 0.0}) < 1e-14);

    CHECK(by_label(t, "l2").value == doctest::Approx(1.0));

    {
        // Independent arithmetic for the l=1 branch at q = 3.
        const double si = std::sqrt(2.0 / 3.0), so = std::sqrt(6.0);
        const double a1 = -1.0 / std::sqrt((1.0 + si) * (1.0 + so));
        const double a2 = std::sqrt((1.0 + si) / (1.0 + so));
        const double expected =
            (1.0 / a2) * std::pow(1.0 + (a1 + a2) * (a1 + a2) + (a1 * a2) * (a1 * a2), -1.0);
        const StructuredCandidate& l1 = by_label(t, "l1");
        CHECK(l1.value == doctest::Approx(expected).epsilon(1e-13));
        CHECK(l1.value == doctest::Approx(1.1576).epsilon(1e-3));
        CHECK(l1.value < best.value);
        CHECK(l1.retained);
    }
    {
        // beta = 0 sub-branch carries the squared k=1 extremal's value C(1,p).
        const StructuredCandidate& sub = by_label(t, "l0-beta0");
        const double c1 = std::sqrt(4.0) * std::pow(0.75, 2.0 - 0.5);
        CHECK(sub.value == doctest::Approx(c1).epsilon(1e-13));
        CHECK(sub.retained);
    }
    // q = 3 > 2: no real positive-sign l=1 branch exists.
    CHECK_THROWS_AS(by_label(t, "l1-plus"), std::runtime_error);
}

TEST_CASE("candidates_k2 grid: best branch matches the closed form") {
    for (int i = 1; i <= 9; ++i) {
        const double p = 0.1 * i;
        const CandidateTable t = candidates_k2(p);
        const StructuredCandidate& best = t.entries[t.best];
        CHECK(best.l == 0);
        const double closed = (2.0 / p) * std::pow(1.0 - 0.5 * p, 2.0 / p - 1.0);
        CHECK(best.value == doctest::Approx(closed).epsilon(1e-10));
        // Curious identity against the k=1 table.
        const double c1 = candidates_k1(p).entries[candidates_k1(p).best].value;
        CHECK(best.value == doctest::Approx(c1 * c1).epsilon(1e-10));
    }
}

TEST_CASE("candidates_k2 positive-sign branch is tabled and rejected for p > 2/3") {
    const CandidateTable t = candidates_k2(0.75);
    const StructuredCandidate& plus = by_label(t, "l1-plus");
    CHECK_FALSE(plus.retained);
    CHECK(std::abs(plus.alphas[0]) > 1.0);
    CHECK(by_label(t, "l1").retained);
}

TEST_CASE("candidates_k3_p23 table") {
    const CandidateTable t = candidates_k3_p23();
    CHECK(t.entries.size() == 9);

    const double s33 = std::sqrt(33.0);
    CHECK(by_label(t, "l2").value == doctest::Approx(16.0 / std::sqrt(229.0)).epsilon(1e-13));
    CHECK(by_label(t, "l1-eta0").value ==
          doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(by_label(t, "l0-minus").value ==
          doctest::Approx(std::sqrt(2.0 * (1103.0 + 33.0 * s33) / 1153.0)).epsilon(1e-13));
    CHECK(by_label(t, "l0-plus").value ==
          doctest::Approx(std::sqrt(2.0 * (1103.0 - 33.0 * s33) / 1153.0)).epsilon(1e-13));
    CHECK(by_label(t, "l0-beta0").value ==
          doctest::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-13));
    CHECK(by_label(t, "l3").value == doctest::Approx(1.0));

    CHECK(by_label(t, "l1-xi1").value == doctest::Approx(1.0739).epsilon(1e-4));
    CHECK(by_label(t, "l1-xi2").value == doctest::Approx(1.1958).epsilon(1e-4));
    CHECK(by_label(t, "l1-xi3").value == doctest::Approx(1.1067).epsilon(1e-4));

    // The xi_1 cubic branch violates the Blaschke bound and is kept as rejected.
    const StructuredCandidate& xi1 = by_label(t, "l1-xi1");
    CHECK_FALSE(xi1.retained);
    CHECK(std::abs(xi1.alphas[0]) > 4.0);
    CHECK(by_label(t, "l1-xi2").retained);
    CHECK(by_label(t, "l1-xi3").retained);
    CHECK(by_label(t, "l0-plus").retained);

    // Best entry is the l=0 minus branch and it leads the table.
    CHECK(t.best == 0);
    CHECK(t.entries[0].branch_label == "l0-minus");
    CHECK(t.entries[0].l == 0);
}

TEST_CASE("k3 cubic roots") {
    const auto roots = k3_cubic_roots();
    CHECK(roots[0] == doctest::Approx(-0.2049).epsilon(1e-3));
    CHECK(roots[1] == doctest::Approx(0.6281).epsilon(1e-3));
    CHECK(roots[2] == doctest::Approx(0.7768).epsilon(1e-3));
    for (double x : roots) {
        CHECK(std::abs(((10.0 * x - 12.0) * x + 2.0) * x + 1.0) < 1e-13);
    }
}

TEST_CASE("candidate_value") {
    StructuredCandidate trivial;
    trivial.k = 2;
    trivial.p = 0.5;
    trivial.l = 2;
    trivial.alphas = {cx{0.0, 0.0}, cx{0.0, 0.0}};
    trivial.lambda = cx{1.0, 0.0};
    CHECK(candidate_value(trivial) == doctest::Approx(1.0));

    StructuredCandidate stale = trivial;
    stale.lambda = cx{1.5, 0.0};
    CHECK_THROWS_AS(candidate_value(stale), StaleCandidate);

    const CandidateTable t = candidates_k3_p23();
    CHECK(candidate_value(by_label(t, "l2")) ==
          doctest::Approx(16.0 / std::sqrt(229.0)).epsilon(1e-13));
}

TEST_CASE("extremal_function matches the displayed k=2 extremal") {
    for (double p : {0.25, 0.5, 0.75}) {
        const CandidateTable t = candidates_k2(p);
        const FactoredFunction f = extremal_function(t.entries[t.best]);
        // Displayed form: (1-p/2)^{2/p} (1 + sqrt(2p/(2-p)) z + p/(2-p) z^2)^{2/p}.
        const Poly inner{cx{1.0, 0.0}, cx{std::sqrt(2.0 * p / (2.0 - p)), 0.0},
                         cx{p / (2.0 - p), 0.0}};
        const Poly displayed = series_pow(inner, 2.0 / p, Truncation{8});
        const double scale = std::pow(1.0 - 0.5 * p, 2.0 / p);
        // f = A g h^q with g = h: compare the series of A h^{2/p}.
        const Poly mine = series_pow(f.h, 2.0 / p, Truncation{8});
        for (int n = 0; n <= 8; ++n) {
            CHECK(std::abs(f.A * mine.coeff(n) - scale * displayed.coeff(n)) < 1e-12);
        }
    }
}

TEST_CASE("extremal_function of the monomial candidate") {
    const CandidateTable t = candidates_k3_p23();
    const StructuredCandidate& l3 = by_label(t, "l3");
    const FactoredFunction f = extremal_function(l3);
    CHECK(f.g == Poly::monomial(3));
    CHECK(f.h == Poly{cx{1.0, 0.0}, cx{0.0, 0.0}, cx{0.0, 0.0}, cx{0.0, 0.0}});
    CHECK(f.A == doctest::Approx(1.0));
}

TEST_CASE("extremal zero-freeness corresponds to l") {
    const CandidateTable t = candidates_k2(0.5);
    {
        const FactoredFunction f = extremal_function(t.entries[t.best]);
        CHECK(zeros_in_closed_disc(f.g, 0.0).empty());
    }
    {
        const FactoredFunction f = extremal_function(by_label(t, "l1"));
        CHECK(zeros_in_closed_disc(f.g, 0.0).size() == 1);
    }
}

TEST_CASE("every retained entry yields a unit-norm extremal with the right coefficient") {
    auto check_table = [](const CandidateTable& t) {
        for (const auto& e : t.entries) {
            if (!e.retained) continue;
            CHECK(e.value > 0.0);
            const FactoredFunction f = extremal_function(e);
            const NormEstimate est = hp_norm(f, e.p, 1e-10);
            CHECK(est.converged);
            CHECK(est.value == doctest::Approx(1.0).epsilon(1e-7));
            // Zero-free in the closed disc exactly when l = 0 (h is always
            // zero-free, so the zeros of f are the zeros of g).
            CHECK(zeros_in_closed_disc(f.g, 0.0).empty() == (e.l == 0));
            // k-th Taylor coefficient through the series engine equals value.
            const Poly hq = series_pow(f.h, f.q, Truncation{e.k});
            const Poly coeffs = cauchy_product(f.g, hq, Truncation{e.k});
            CHECK(std::abs(f.A * coeffs.coeff(e.k) - cx{e.value, 0.0}) < 1e-9);
        }
    };
    check_table(candidates_k2(0.5));
    check_table(candidates_k2(0.75));
    check_table(candidates_k3_p23());
}

TEST_CASE("phi and psi") {
    CHECK(phi(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(phi(3.0) > 1.0);
    // Critical value of Psi at q = 1 + sqrt(2) is (sqrt(2)-1) - log(sqrt(2)) > 0.
    const double qc = 1.0 + std::sqrt(2.0);
    const double expected = (std::sqrt(2.0) - 1.0) - std::log(std::sqrt(2.0));
    CHECK(psi(qc) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(psi(qc) > 0.0);
    CHECK_THROWS_AS(phi(0.5), DomainError);
    CHECK_THROWS_AS(psi(0.99), DomainError);
}

TEST_CASE("canonical parameters and gauge distance") {
    const CandidateTable t = candidates_k3_p23();
    const StructuredCandidate& b = t.entries[t.best];
    for (double theta : {0.3, 1.9, 4.4}) {
        std::vector<cx> rotated = b.alphas;
        for (cx& a : rotated) a *= std::polar(1.0, -theta);
        const cx lam = b.lambda * std::polar(1.0, -theta * (b.k - b.l));
        CHECK(gauge_distance(b.k, b.l, b.alphas, b.lambda, rotated, lam) < 1e-10);
    }
    // canonical_params is a deterministic function of its input.
    const auto c1 = canonical_params(b.k, b.l, b.alphas, b.lambda);
    const auto c2 = canonical_params(b.k, b.l, b.alphas, b.lambda);
    REQUIRE(c1.size() == c2.size());
    for (std::size_t i = 0; i < c1.size(); ++i) CHECK(c1[i] == c2[i]);
    // Distinct branches stay far apart.
    const StructuredCandidate& other = by_label(t, "l0-plus");
    CHECK(gauge_distance(3, 0, b.alphas, b.lambda, other.alphas, other.lambda) > 1e-2);
}
