#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hpcoef {

/// Argument outside the documented domain of an operation (e.g. p outside (0,1)).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// series_pow requires a nonzero constant term.
struct ZeroConstantTerm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// series_pow requires the constant term to sit on the positive real axis, so the
/// principal branch of h(0)^q is unambiguous.
struct NonPositiveConstantTerm : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// flip(g, k) requires deg g <= k.
struct DegreeTooHigh : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// All coefficients numerically indistinguishable from zero.
struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Quadrature refinement hit its node cap; carries the best estimate so far.
struct NoConvergence : std::runtime_error {
    NoConvergence(const std::string& msg, double best_value, double err_estimate,
                  std::uint32_t samples)
        : std::runtime_error(msg), best_value(best_value), err_estimate(err_estimate),
          samples(samples) {}
    double best_value;
    double err_estimate;
    std::uint32_t samples;
};

/// Trigonometric polynomial failed the nonnegativity grid check.
struct NotNonnegative : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Spectral factorization could not match roots into reflection pairs.
struct PairingFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Candidate no longer satisfies its flip-equation residual precondition.
struct StaleCandidate : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Internal consistency check failed; indicates an implementation bug.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hpcoef
