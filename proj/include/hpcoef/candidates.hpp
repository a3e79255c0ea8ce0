#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "hpcoef/hardy.hpp"
#include "hpcoef/series.hpp"

namespace hpcoef {

/// One solution of the flip-equation system: zero parameters, Blaschke count,
/// multiplier, and the normalized functional value a_k. Branches that violate the
/// structural constraints |alpha_j| <= 1 (strict for j <= l) are kept in tables
/// with retained=false and a reason, never dropped.
struct StructuredCandidate {
    int k = 0;
    double p = 0.0;
    int l = 0;
    std::vector<cx> alphas;
    cx lambda{1.0, 0.0};
    double value = 0.0;
    std::string branch_label;
    bool retained = true;
    std::string reject_reason;
};

/// All candidate branches for one (k, p), sorted by value descending.
/// best indexes the maximum-value retained entry.
struct CandidateTable {
    int k = 0;
    double p = 0.0;
    std::vector<StructuredCandidate> entries;
    std::size_t best = 0;
};

/// g(z) = prod_{j<=l} (z + alpha_j) * prod_{j>l} (1 + conj(alpha_j) z), degree k.
Poly structured_g(const std::vector<cx>& alphas, int l);

/// h(z) = prod_j (1 + conj(alpha_j) z), degree k, h(0) = 1.
Poly structured_h(const std::vector<cx>& alphas);

/// Closed-form tables. candidates_k1/k2 require 0 < p < 1 (DomainError otherwise);
/// candidates_k3_p23 is pinned to p = 2/3.
CandidateTable candidates_k1(double p);
CandidateTable candidates_k2(double p);
CandidateTable candidates_k3_p23();

/// Normalized functional value |lambda| * ||h||_{H^2}^{2(1-1/p)} with h built from
/// the alphas. Throws StaleCandidate when the flip residual exceeds 1e-9.
double candidate_value(const StructuredCandidate& c);

/// The normalized extremal f = A g h^q with q = 2/p - 1 and A = ||h||^{-2/p}.
FactoredFunction extremal_function(const StructuredCandidate& c);

/// Comparison functions from the k=2 case ordering, defined for q >= 1:
///   Phi(q) = sqrt((1+sqrt(2/q))/(1+sqrt(2q))) * q * (1+1/q)^{1-q}
///   Psi(q) = sqrt(2)/(1+q) - log(1+1/q)
double phi(double q);
double psi(double q);

/// Roots of 10 xi^3 - 12 xi^2 + 2 xi + 1, ascending. Computed by the closed
/// trigonometric form and polished by one Newton step; the two must agree to
/// 1e-12 or InvariantViolation is thrown.
std::array<double, 3> k3_cubic_roots();

/// Deterministic representative of the rotation orbit of (alphas, lambda):
/// the gauge quantity (product of alphas j > l, or lambda when l = k) is made
/// real nonnegative, the leftover discrete rotations are enumerated, blocks are
/// sorted, and the lexicographically smallest configuration is returned as
/// [alpha_1..alpha_k, lambda].
std::vector<cx> canonical_params(int k, int l, const std::vector<cx>& alphas, cx lambda);

/// Sup-distance between the rotation orbits of two parameter sets; stable under
/// small perturbations (minimizes over the discrete gauge copies).
double gauge_distance(int k, int l, const std::vector<cx>& a_alphas, cx a_lambda,
                      const std::vector<cx>& b_alphas, cx b_lambda);

}  // namespace hpcoef
