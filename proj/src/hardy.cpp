#include "hpcoef/hardy.hpp"

#include <cmath>

#include "hpcoef/errors.hpp"
#include "hpcoef/roots.hpp"

namespace hpcoef {
namespace {

// value^p at a single node count, compensated summation in index order.
double boundary_mean_p(const FactoredFunction& f, double p, std::uint32_t n) {
    KahanSum acc;
    const double step = 2.0 * kPi / static_cast<double>(n);
    for (std::uint32_t j = 0; j < n; ++j) {
        const double theta = step * static_cast<double>(j);
        const cx w{std::cos(theta), std::sin(theta)};
        const double ag = std::abs(eval(f.g, w));
        const double ah = std::abs(eval(f.h, w));
        acc.add(std::pow(ag, p) * std::pow(ah, p * f.q));
    }
    return std::pow(f.A, p) * acc.value() / static_cast<double>(n);
}

bool has_near_circle_root(const Poly& pol) {
    if (math_degree(pol) < 1) return false;
    for (const cx& r : polynomial_roots(pol)) {
        if (std::abs(std::abs(r) - 1.0) <= 1e-6) return true;
    }
    return false;
}

}  // namespace

void validate(const FactoredFunction& f) {
    if (!(f.q > 0.0)) throw DomainError("FactoredFunction: q must be > 0");
    if (!(f.A > 0.0)) throw DomainError("FactoredFunction: A must be > 0");
    if (!zeros_in_closed_disc(f.h, 1e-9).empty()) {
        throw DomainError("FactoredFunction: h has a zero in the closed unit disc");
    }
}

NormEstimate hp_norm(const FactoredFunction& f, double p, double target_tol) {
    if (!(p > 0.0 && p < 2.0)) throw DomainError("hp_norm: p must lie in (0,2)");
    if (!(target_tol > 0.0)) throw DomainError("hp_norm: target_tol must be > 0");
    validate(f);

    std::uint32_t n = 1u << 10;
    if (has_near_circle_root(f.h) || has_near_circle_root(f.g)) {
        n = 1u << 18;
    }
    constexpr std::uint32_t kMaxNodes = 1u << 20;

    double prev = boundary_mean_p(f, p, n);
    NormEstimate est;
    est.p = p;
    for (;;) {
        n *= 2;
        const double cur = boundary_mean_p(f, p, n);
        const double diff = std::abs(cur - prev);
        est.value = std::pow(cur, 1.0 / p);
        est.samples = n;
        est.err_estimate = diff;
        if (diff < target_tol) {
            est.converged = true;
            return est;
        }
        if (n >= kMaxNodes) {
            est.converged = false;
            return est;
        }
        prev = cur;
    }
}

double h2_norm_sq(const Poly& pol) {
    KahanSum acc;
    for (const cx& v : pol.c) acc.add(std::norm(v));
    return acc.value();
}

NormIdentityReport check_norm_identities(const FactoredFunction& f, double p, double tol) {
    NormIdentityReport rep;
    rep.estimate = hp_norm(f, p, std::min(tol / 10.0, 1e-10));
    const double vp = std::pow(rep.estimate.value, p);
    const double ap = std::pow(f.A, p);
    rep.resid_h = std::abs(vp - ap * h2_norm_sq(f.h));

    double mismatch = 0.0;
    for (int j = 0; j < 64; ++j) {
        const double theta = 2.0 * kPi * j / 64.0;
        const cx w{std::cos(theta), std::sin(theta)};
        const double ah = std::abs(eval(f.h, w));
        mismatch = std::max(mismatch,
                            std::abs(std::abs(eval(f.g, w)) - ah) / std::max(1.0, ah));
    }
    rep.g_comparable = mismatch <= 1e-9;
    if (rep.g_comparable) {
        rep.resid_g = std::abs(vp - ap * h2_norm_sq(f.g));
    }
    rep.ok = rep.estimate.converged && rep.resid_h <= tol &&
             (!rep.g_comparable || rep.resid_g <= tol);
    return rep;
}

std::vector<cx> zeros_in_closed_disc(const Poly& pol, double tol) {
    std::vector<cx> in;
    for (const cx& r : polynomial_roots(pol)) {
        if (std::abs(r) <= 1.0 + tol) in.push_back(r);
    }
    return in;
}

}  // namespace hpcoef
