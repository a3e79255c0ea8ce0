#pragma once

#include <vector>

#include "hpcoef/series.hpp"

namespace hpcoef {

/// Real-valued trigonometric polynomial Q(theta) = sum_{|n|<=k} a_n e^{i n theta},
/// stored as a[j] = a_{j-k} with Hermitian symmetry a_{-n} = conj(a_n).
struct TrigPoly {
    std::vector<cx> a;  ///< size 2k+1
    int k = 0;

    cx coef(int n) const {
        if (n < -k || n > k) return {0.0, 0.0};
        return a[static_cast<std::size_t>(n + k)];
    }
    double eval(double theta) const;
    double sup_norm_grid(int nodes = 4096) const;
};

/// Builds a TrigPoly from the full coefficient row a_{-k}..a_k (odd length),
/// validating Hermitian symmetry to 1e-12 of the largest coefficient.
TrigPoly make_trig_poly(std::vector<cx> full_coeffs);

/// Autocorrelation |P(e^{i theta})|^2: a_n = sum_j p_{j+n} conj(p_j).
TrigPoly modulus_squared(const Poly& pol);

/// Fejer-Riesz spectral factor: the outer polynomial P (no zeros in the open unit
/// disc, P(0) real positive) with modulus_squared(P) = Q. Roots of the Laurent
/// symbol z^k Q(z) are matched into reflection pairs w <-> 1/conj(w); roots on the
/// circle are snapped and split evenly. Throws NotNonnegative when Q dips below
/// -tol on a 4096-node grid, PairingFailure when matching or the reconstruction
/// check fails.
Poly spectral_factor(const TrigPoly& Q, double tol);

}  // namespace hpcoef
