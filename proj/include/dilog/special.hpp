#pragma once

// Stand-alone dilogarithm relations on golden-ratio arguments, and the
// Rogers-function form of the family ladders.

#include "dilog/bigreal.hpp"
#include "dilog/certify.hpp"
#include "dilog/numerics.hpp"

#include <string>
#include <vector>

namespace dilog {

/// L(1/(phi (phi + sqrt phi))) - L(phi / (phi + sqrt phi)) against pi^2/20.
struct KhoiReport {
  BigReal first_argument;   // ~0.2138
  BigReal second_argument;  // ~0.5598
  BigReal lhs;
  BigReal target;    // pi^2 / 20
  BigReal residual;  // lhs - target
  /// The same difference obtained from the Lima duplication at z equal to
  /// the first argument, where 1/(2 - z) is the second argument.
  BigReal lima_route;
  BigReal lima_argument_gap;  // |1/(2 - z) - second_argument|
  /// lhs + target: the residual if the right-hand side had the other sign.
  BigReal sign_flipped_residual;
};

KhoiReport verify_khoi(Precision p);

/// L(z) - L(1/(2 - z)) - L(2z - z^2)/2 + pi^2/12 for 0 < z < 1.
struct LimaReport {
  BigReal z;
  BigReal reflected;   // 1/(2 - z)
  BigReal duplicated;  // 2z - z^2
  BigReal residual;
};

/// Throws Error(InvalidArgument) unless 0 < z < 1.
LimaReport verify_lima(const BigReal& z, Precision p);

/// Li2(1/(2 phi^2) - sqrt(-1 - 1/phi^2)/2) - Li2((1 - sqrt((1 - 2 phi)(1 + 2 phi)))/2)
///   against log^2(phi)/2 + 3 pi i log(phi)/5 + pi^2/150,
/// with principal square roots and the principal Li2 branch.
struct ConjectureReport {
  BigComplex first_argument;
  BigComplex second_argument;
  BigReal second_modulus;  // equals phi
  Li2Route first_route = Li2Route::Zero;
  Li2Route second_route = Li2Route::Zero;
  BigComplex lhs;
  BigComplex rhs;
  BigReal residual_re;
  BigReal residual_im;
  /// Imaginary residual with both arguments conjugated (the other side of
  /// the real axis); large when the stated sign of the imaginary part is
  /// tied to the principal branch.
  BigReal conjugate_residual_im;
  std::string branch;
};

ConjectureReport verify_conjecture(Precision p);

/// One Rogers-function identity and its numeric residual.
struct RogersCheck {
  std::string label;
  std::string statement;
  BigReal residual;
};

/// The family ladder in Rogers form, 2 L(u^(n+1)) - 2 L(u^n) - L(u) = -zeta(2)
/// (even) or 2 L(u^(n+2)) - 2 L(u^n) - L(u^2) = -zeta(2) (odd). For the
/// even family also evaluates the variant with leading coefficient 1 that
/// appears in the source's derivation; that variant is expected to fail.
std::vector<RogersCheck> rogers_form_checks(Parity parity, int n, Precision p);

}  // namespace dilog
