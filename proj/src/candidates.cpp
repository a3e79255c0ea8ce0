#include "hpcoef/candidates.hpp"

#include <algorithm>
#include <cmath>

#include "hpcoef/errors.hpp"
#include "hpcoef/roots.hpp"
#include "hpcoef/solver.hpp"

namespace hpcoef {
namespace {

constexpr double kResidualGate = 1e-9;

// Roots of t^2 - s t + m (sum s, product m).
std::pair<cx, cx> quadratic_pair(cx s, cx m) {
    const cx disc = std::sqrt(s * s - 4.0 * m);
    const cx t1 = 0.5 * (s + disc);
    const cx t2 = 0.5 * (s - disc);
    return {t1, t2};
}

// Alphas of h(z) = prod (1 + conj(alpha_j) z) given its coefficient vector:
// alpha_j = -1/conj(r_j) over the roots r_j of h.
std::vector<cx> alphas_from_h(const Poly& h) {
    std::vector<cx> alphas;
    for (const cx& r : polynomial_roots(h)) {
        alphas.push_back(-1.0 / std::conj(r));
    }
    return alphas;
}

void classify(StructuredCandidate& c) {
    c.retained = true;
    c.reject_reason.clear();
    for (int j = 0; j < c.k; ++j) {
        const double m = std::abs(c.alphas[static_cast<std::size_t>(j)]);
        if (j < c.l && m >= 1.0 - 1e-12) {
            c.retained = false;
            c.reject_reason = "Blaschke parameter alpha_" + std::to_string(j + 1) +
                              " has modulus >= 1";
            return;
        }
        if (m > 1.0 + 1e-12) {
            c.retained = false;
            c.reject_reason = "alpha_" + std::to_string(j + 1) + " has modulus > 1";
            return;
        }
    }
}

StructuredCandidate make_candidate(int k, double p, int l, std::vector<cx> alphas,
                                   cx lambda, std::string label) {
    StructuredCandidate c;
    c.k = k;
    c.p = p;
    c.l = l;
    c.alphas = std::move(alphas);
    c.lambda = lambda;
    c.branch_label = std::move(label);
    classify(c);
    const FlipSystem sys = make_flip_system(k, p, l);
    const double res = flip_residual_sup(sys, c.alphas, c.lambda);
    if (res > kResidualGate) {
        throw InvariantViolation("candidate '" + c.branch_label +
                                 "' fails the flip residual gate");
    }
    c.value = candidate_value(c);
    return c;
}

CandidateTable finalize_table(int k, double p, std::vector<StructuredCandidate> entries) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const StructuredCandidate& a, const StructuredCandidate& b) {
                         if (a.value != b.value) return a.value > b.value;
                         return a.branch_label < b.branch_label;
                     });
    CandidateTable t;
    t.k = k;
    t.p = p;
    t.entries = std::move(entries);
    t.best = 0;
    double best_val = -1.0;
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        if (t.entries[i].retained && t.entries[i].value > best_val) {
            best_val = t.entries[i].value;
            t.best = i;
        }
    }
    return t;
}

void require_p_open01(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0,1)");
}

}  // namespace

Poly structured_g(const std::vector<cx>& alphas, int l) {
    Poly g = Poly::one();
    for (int j = 0; j < static_cast<int>(alphas.size()); ++j) {
        const cx a = alphas[static_cast<std::size_t>(j)];
        if (j < l) {
            g = multiply(g, Poly{a, cx{1.0, 0.0}});
        } else {
            g = multiply(g, Poly{cx{1.0, 0.0}, std::conj(a)});
        }
    }
    return g;
}

Poly structured_h(const std::vector<cx>& alphas) {
    Poly h = Poly::one();
    for (const cx& a : alphas) {
        h = multiply(h, Poly{cx{1.0, 0.0}, std::conj(a)});
    }
    return h;
}

CandidateTable candidates_k1(double p) {
    require_p_open01(p);
    const double q = 2.0 / p - 1.0;
    std::vector<StructuredCandidate> entries;

    const double a1 = std::sqrt(p / (2.0 - p));  // = 1/sqrt(q)
    entries.push_back(make_candidate(1, p, 0, {cx{a1, 0.0}}, cx{std::sqrt(q), 0.0}, "l0"));
    entries.push_back(make_candidate(1, p, 1, {cx{0.0, 0.0}}, cx{1.0, 0.0}, "l1"));
    return finalize_table(1, p, std::move(entries));
}

CandidateTable candidates_k2(double p) {
    require_p_open01(p);
    const double q = 2.0 / p - 1.0;
    std::vector<StructuredCandidate> entries;

    {
        // l = 0 main branch: alpha_1 alpha_2 = 1/q, alpha_1 + alpha_2 = sqrt(2/q).
        const double half = 0.5 * std::sqrt(2.0 / q);
        entries.push_back(make_candidate(2, p, 0, {cx{half, half}, cx{half, -half}},
                                         cx{q, 0.0}, "l0"));
    }
    {
        // l = 0, beta = 0: the k=1 extremal with the argument squared.
        const double r = std::pow(q, -0.25);
        entries.push_back(make_candidate(2, p, 0, {cx{0.0, r}, cx{0.0, -r}},
                                         cx{std::sqrt(q), 0.0}, "l0-beta0"));
    }
    {
        // l = 1, negative-sign branch.
        const double s_in = std::sqrt(2.0 / q);
        const double s_out = std::sqrt(2.0 * q);
        const double a1 = -1.0 / std::sqrt((1.0 + s_in) * (1.0 + s_out));
        const double a2 = std::sqrt((1.0 + s_in) / (1.0 + s_out));
        entries.push_back(make_candidate(2, p, 1, {cx{a1, 0.0}, cx{a2, 0.0}},
                                         cx{1.0 / a2, 0.0}, "l1"));
    }
    if (q < 2.0 - 1e-12) {
        // l = 1, positive-sign branch; real only for q < 2 and always lands
        // outside the Blaschke bound, so it is tabled as rejected.
        const double t = (std::sqrt(2.0 / q) - 1.0) * (std::sqrt(2.0 * q) - 1.0);
        if (t > 1e-12) {
            const double a1 = 1.0 / std::sqrt(t);
            const double a2 = a1 * (std::sqrt(2.0 / q) - 1.0);
            entries.push_back(make_candidate(2, p, 1, {cx{a1, 0.0}, cx{a2, 0.0}},
                                             cx{1.0 / a2, 0.0}, "l1-plus"));
        }
    }
    entries.push_back(make_candidate(2, p, 2, {cx{0.0, 0.0}, cx{0.0, 0.0}},
                                     cx{1.0, 0.0}, "l2"));
    return finalize_table(2, p, std::move(entries));
}

CandidateTable candidates_k3_p23() {
    const double p = 2.0 / 3.0;
    std::vector<StructuredCandidate> entries;

    {
        // l = 0, both sign branches: alpha = sqrt(15 -+ sqrt(33))/8,
        // beta = (1 - 4 alpha^2)/alpha, gamma = 2 - 8 alpha^2.
        const double s33 = std::sqrt(33.0);
        for (int sign = -1; sign <= 1; sign += 2) {
            const double alpha = std::sqrt(15.0 + sign * s33) / 8.0;
            const double beta = (1.0 - 4.0 * alpha * alpha) / alpha;
            const double gamma = 2.0 - 8.0 * alpha * alpha;
            const Poly h{cx{1.0, 0.0}, cx{beta, 0.0}, cx{gamma, 0.0}, cx{alpha, 0.0}};
            entries.push_back(make_candidate(3, p, 0, alphas_from_h(h),
                                             cx{1.0 / alpha, 0.0},
                                             sign < 0 ? "l0-minus" : "l0-plus"));
        }
    }
    {
        // l = 0, beta = gamma = 0: the k=1 extremal with the argument cubed.
        const double r = std::pow(2.0, -1.0 / 6.0);
        const cx w{std::cos(2.0 * kPi / 3.0), std::sin(2.0 * kPi / 3.0)};
        entries.push_back(make_candidate(3, p, 0, {cx{r, 0.0}, r * w, r * std::conj(w)},
                                         cx{std::sqrt(2.0), 0.0}, "l0-beta0"));
    }
    {
        // l = 1, eta = 0 branch: rho = 0, xi^2 = 1/2. The sign of xi is gauge;
        // xi = +1/sqrt(2) carries a_3 > 0 (alpha_2, alpha_3 purely imaginary).
        const double xi = 1.0 / std::sqrt(2.0);
        auto [t1, t2] = quadratic_pair(cx{0.0, 0.0}, cx{xi, 0.0});
        entries.push_back(make_candidate(3, p, 1, {cx{0.0, 0.0}, t1, t2},
                                         cx{1.0 / xi, 0.0}, "l1-eta0"));
    }
    {
        // l = 1, cubic branches: eta = sqrt((1-2 xi^2)/(2-3 xi)) >= 0 and
        // rho = eta (1/xi - 2).
        const auto xis = k3_cubic_roots();
        const char* labels[3] = {"l1-xi1", "l1-xi2", "l1-xi3"};
        for (int i = 0; i < 3; ++i) {
            const double xi = xis[static_cast<std::size_t>(i)];
            const double eta = std::sqrt((1.0 - 2.0 * xi * xi) / (2.0 - 3.0 * xi));
            const double rho = eta * (1.0 / xi - 2.0);
            auto [t1, t2] = quadratic_pair(cx{eta, 0.0}, cx{xi, 0.0});
            entries.push_back(make_candidate(3, p, 1, {cx{rho, 0.0}, t1, t2},
                                             cx{1.0 / xi, 0.0}, labels[i]));
        }
    }
    {
        // l = 2: rho = sqrt(3)/2, eta = -sqrt(3)/3, xi = 1/4.
        const double rho = std::sqrt(3.0) / 2.0;
        const double eta = 1.0 / rho - 2.0 * rho;
        const double xi = 3.0 * rho * rho - 2.0;
        auto [t1, t2] = quadratic_pair(cx{eta, 0.0}, cx{xi, 0.0});
        entries.push_back(make_candidate(3, p, 2, {t1, t2, cx{rho, 0.0}},
                                         cx{1.0 / rho, 0.0}, "l2"));
    }
    entries.push_back(make_candidate(3, p, 3,
                                     {cx{0.0, 0.0}, cx{0.0, 0.0}, cx{0.0, 0.0}},
                                     cx{1.0, 0.0}, "l3"));
    return finalize_table(3, p, std::move(entries));
}

double candidate_value(const StructuredCandidate& c) {
    const FlipSystem sys = make_flip_system(c.k, c.p, c.l);
    if (flip_residual_sup(sys, c.alphas, c.lambda) > kResidualGate) {
        throw StaleCandidate("candidate residual exceeds 1e-9");
    }
    const Poly h = structured_h(c.alphas);
    return std::abs(c.lambda) * std::pow(h2_norm_sq(h), 1.0 - 1.0 / c.p);
}

FactoredFunction extremal_function(const StructuredCandidate& c) {
    FactoredFunction f;
    f.g = structured_g(c.alphas, c.l);
    f.h = structured_h(c.alphas);
    f.q = 2.0 / c.p - 1.0;
    f.A = std::pow(h2_norm_sq(f.h), -1.0 / c.p);
    return f;
}

double phi(double q) {
    if (!(q >= 1.0)) throw DomainError("phi: requires q >= 1");
    const double ratio = (1.0 + std::sqrt(2.0 / q)) / (1.0 + std::sqrt(2.0 * q));
    return std::sqrt(ratio) * q * std::pow(1.0 + 1.0 / q, 1.0 - q);
}

double psi(double q) {
    if (!(q >= 1.0)) throw DomainError("psi: requires q >= 1");
    return std::sqrt(2.0) / (1.0 + q) - std::log1p(1.0 / q);
}

std::array<double, 3> k3_cubic_roots() {
    const double theta = std::atan(5.0 * std::sqrt(111.0) / 117.0) / 3.0;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double f = std::sqrt(7.0 / 3.0);
    std::array<double, 3> raw = {
        0.4 * (1.0 - f * c),
        0.2 * (2.0 + f * (c - std::sqrt(3.0) * s)),
        0.2 * (2.0 + f * (c + std::sqrt(3.0) * s)),
    };
    std::array<double, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        const double x = raw[i];
        const double fx = ((10.0 * x - 12.0) * x + 2.0) * x + 1.0;
        const double dfx = (30.0 * x - 24.0) * x + 2.0;
        const double polished = x - fx / dfx;
        if (std::abs(polished - x) > 1e-12) {
            throw InvariantViolation("k3_cubic_roots: closed form and Newton disagree");
        }
        out[i] = polished;
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct GaugeOrbit {
    // Configurations equivalent under the leftover discrete rotations, each with
    // blocks sorted; lambda is shared by all of them.
    std::vector<std::vector<cx>> alpha_configs;
    cx lambda;
};

bool lex_less(const std::vector<cx>& a, const std::vector<cx>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

void sort_blocks(std::vector<cx>& v, int l) {
    auto cmp = [](const cx& x, const cx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    };
    std::sort(v.begin(), v.begin() + l, cmp);
    std::sort(v.begin() + l, v.end(), cmp);
}

GaugeOrbit gauge_orbit(int k, int l, const std::vector<cx>& alphas, cx lambda) {
    GaugeOrbit orbit;
    const int m = k - l;
    if (m == 0) {
        std::vector<cx> v = alphas;
        sort_blocks(v, l);
        orbit.alpha_configs.push_back(std::move(v));
        orbit.lambda = lambda;
        return orbit;
    }
    cx g{1.0, 0.0};
    for (int j = l; j < k; ++j) g *= alphas[static_cast<std::size_t>(j)];
    double theta0 = 0.0;
    if (std::abs(g) > 1e-12) theta0 = std::arg(g) / static_cast<double>(m);
    orbit.lambda = lambda * std::polar(1.0, -static_cast<double>(m) * theta0);
    for (int r = 0; r < m; ++r) {
        const double theta = theta0 + 2.0 * kPi * r / static_cast<double>(m);
        const cx rot = std::polar(1.0, -theta);
        std::vector<cx> v(alphas.size());
        for (std::size_t j = 0; j < alphas.size(); ++j) v[j] = rot * alphas[j];
        sort_blocks(v, l);
        orbit.alpha_configs.push_back(std::move(v));
    }
    return orbit;
}

}  // namespace

std::vector<cx> canonical_params(int k, int l, const std::vector<cx>& alphas, cx lambda) {
    GaugeOrbit orbit = gauge_orbit(k, l, alphas, lambda);
    std::size_t best = 0;
    for (std::size_t i = 1; i < orbit.alpha_configs.size(); ++i) {
        if (lex_less(orbit.alpha_configs[i], orbit.alpha_configs[best])) best = i;
    }
    std::vector<cx> out = orbit.alpha_configs[best];
    out.push_back(orbit.lambda);
    return out;
}

namespace {

// Exact bottleneck matching of one block: min over permutations of the max
// pairwise distance. Block sizes are tiny (<= k), so brute force is fine.
double block_match(const std::vector<cx>& a, const std::vector<cx>& b, std::size_t lo,
                   std::size_t hi) {
    std::vector<std::size_t> idx;
    for (std::size_t i = lo; i < hi; ++i) idx.push_back(i);
    double best = std::numeric_limits<double>::infinity();
    std::sort(idx.begin(), idx.end());
    do {
        double d = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            d = std::max(d, std::abs(a[i] - b[idx[i - lo]]));
        }
        best = std::min(best, d);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return best;
}

}  // namespace

double gauge_distance(int k, int l, const std::vector<cx>& a_alphas, cx a_lambda,
                      const std::vector<cx>& b_alphas, cx b_lambda) {
    const GaugeOrbit oa = gauge_orbit(k, l, a_alphas, a_lambda);
    const GaugeOrbit ob = gauge_orbit(k, l, b_alphas, b_lambda);
    double best = std::numeric_limits<double>::infinity();
    const std::vector<cx>& ref = oa.alpha_configs.front();
    const std::size_t nl = static_cast<std::size_t>(l);
    for (const auto& cfg : ob.alpha_configs) {
        double d = std::abs(oa.lambda - ob.lambda);
        d = std::max(d, block_match(ref, cfg, 0, nl));
        d = std::max(d, block_match(ref, cfg, nl, ref.size()));
        best = std::min(best, d);
    }
    return best;
}

}  // namespace hpcoef
