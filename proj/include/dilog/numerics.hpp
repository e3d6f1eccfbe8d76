#pragma once

// Constants and polylogarithm-family special functions.
//
// All functions are pure: the result precision is the explicit `p`
// argument, and the returned value is within 2^(-p + kGuardBits) relative
// error of the exact value. Internally each routine works at p plus a few
// dozen guard bits and rounds once at the end.

#include "dilog/bigreal.hpp"

namespace dilog {

BigReal golden_ratio(Precision p);
/// zeta(2) = pi^2 / 6.
BigReal const_zeta2(Precision p);

/// Real dilogarithm for z <= 1. The defining series is only ever summed
/// for |argument| <= 1/2; everything else is reduced through the
/// complement, Landen and inversion formulas. Throws std::domain_error for
/// z > 1 (the value is complex there, see li2_complex).
BigReal li2_real(const BigReal& z, Precision p);

/// Which reduction li2_complex applied before summing a series.
enum class Li2Route {
  Zero,
  DirectSeries,      // |z| <= 1/2
  Complement,        // |1 - z| <= 1/2, via Li2(1 - z)
  Landen,            // |z / (z - 1)| <= 1/2
  BernoulliSeries,   // remaining annulus, series in -log(1 - z)
  Inversion,         // |z| > 1, via Li2(1/z), then one of the above
  CutLowerSide,      // real z > 1, boundary value from below the cut
  One,               // z == 1
};

const char* to_string(Li2Route route);

/// Principal-branch dilogarithm with branch cut [1, inf). Points exactly on
/// the cut (Im z == 0, Re z > 1) take the limit from the lower half plane,
/// Li2(x - i0) = pi^2/3 - log^2(x)/2 - Li2(1/x) - i pi log x.
BigComplex li2_complex(const BigComplex& z, Precision p);

/// Same value as li2_complex; also reports the reduction route taken at the
/// top level (useful for branch diagnostics).
BigComplex li2_complex(const BigComplex& z, Precision p, Li2Route& route);

/// Li_n(z) = sum_{k>=1} z^k / k^n for |z| <= 1, n >= 1.
/// Throws std::domain_error for (n, z) = (1, 1) (divergent) or |z| > 1.
BigReal li_n(int n, const BigReal& z, Precision p);

/// Rogers dilogarithm L(x) = Li2(x) + log(x) log(1 - x) / 2 on [0, 1], with
/// L(0) = 0 and L(1) = zeta(2) taken as limits.
BigReal rogers_l(const BigReal& x, Precision p);

/// Legendre chi_2(z) = (Li2(z) - Li2(-z)) / 2 for |z| <= 1.
BigReal chi2(const BigReal& z, Precision p);

}  // namespace dilog
