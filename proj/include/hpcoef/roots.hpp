#pragma once

#include <vector>

#include "hpcoef/series.hpp"

namespace hpcoef {

/// All complex roots of pol (counted with multiplicity), via companion-matrix
/// eigenvalues with Newton polishing. Coefficients below 1e-14 of the largest are
/// treated as zero when fixing the effective degree; roots at the origin are
/// reported exactly. Throws DegenerateInput if every coefficient is below 1e-300.
std::vector<cx> polynomial_roots(const Poly& pol);

}  // namespace hpcoef
