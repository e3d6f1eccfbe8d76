#include "dilog/special.hpp"

#include "dilog/algebra.hpp"
#include "dilog/errors.hpp"

namespace dilog {

namespace {

constexpr long kExtra = 32;

}  // namespace

KhoiReport verify_khoi(Precision p) {
  const Precision wp = p + kExtra;
  const BigReal phi = golden_ratio(wp);
  const BigReal denom = phi + sqrt(phi);
  const BigReal a = BigReal(1, wp) / (phi * denom);
  const BigReal b = phi / denom;
  const BigReal lhs = rogers_l(a, wp) - rogers_l(b, wp);
  const BigReal pi2 = square(const_pi(wp));
  const BigReal target = pi2 / 20;
  const BigReal lima = rogers_l(2 * a - square(a), wp) / 2 - pi2 / 12;
  const BigReal gap = abs(BigReal(1, wp) / (2 - a) - b);
  return {a.rounded(p),        b.rounded(p),    lhs.rounded(p),          target.rounded(p),
          (lhs - target).rounded(p), lima.rounded(p), gap.rounded(p), (lhs + target).rounded(p)};
}

LimaReport verify_lima(const BigReal& z, Precision p) {
  if (!(z > 0 && z < 1)) throw Error(ErrorCode::InvalidArgument, "lima: z must lie strictly inside (0, 1)");
  const Precision wp = p + kExtra;
  const BigReal zz = z.rounded(std::max(wp, z.precision()));
  const BigReal reflected = BigReal(1, wp) / (2 - zz);
  const BigReal duplicated = 2 * zz - square(zz);
  const BigReal res = rogers_l(zz, wp) - rogers_l(reflected, wp) - rogers_l(duplicated, wp) / 2 +
                      square(const_pi(wp)) / 12;
  return {z, reflected.rounded(p), duplicated.rounded(p), res.rounded(p)};
}

ConjectureReport verify_conjecture(Precision p) {
  const Precision wp = p + kExtra;
  const BigReal phi = golden_ratio(wp);
  const BigReal phi2 = square(phi);
  const BigComplex root1 = sqrt(BigComplex(-1 - BigReal(1, wp) / phi2));
  const BigComplex z1 = BigComplex(BigReal(1, wp) / (2 * phi2)) - root1 / 2;
  const BigComplex root2 = sqrt(BigComplex((1 - 2 * phi) * (2 * phi + 1)));
  const BigComplex z2 = BigReal(1, wp) - root2;
  const BigComplex z2h = z2 / 2;

  ConjectureReport out{z1.rounded(p), z2h.rounded(p), abs(z2h).rounded(p), Li2Route::Zero, Li2Route::Zero,
                       BigComplex(p), BigComplex(p), BigReal(p), BigReal(p), BigReal(p), {}};
  const BigComplex li1 = li2_complex(z1, wp, out.first_route);
  const BigComplex li2 = li2_complex(z2h, wp, out.second_route);
  const BigComplex lhs = li1 - li2;
  const BigReal log_phi = log(phi);
  const BigReal pi = const_pi(wp);
  const BigComplex rhs(square(log_phi) / 2 + square(pi) / 150, 3 * pi * log_phi / 5);
  out.lhs = lhs.rounded(p);
  out.rhs = rhs.rounded(p);
  out.residual_re = (lhs.re - rhs.re).rounded(p);
  out.residual_im = (lhs.im - rhs.im).rounded(p);
  const BigComplex flipped = li2_complex(conj(z1), wp) - li2_complex(conj(z2h), wp);
  out.conjugate_residual_im = (flipped.im - rhs.im).rounded(p);
  out.branch = std::string("principal Li2 branch, cut [1, inf); principal square roots; first argument Im < 0 via ") +
               to_string(out.first_route) + ", second argument |z| = phi > 1, Im < 0 via " +
               to_string(out.second_route);
  return out;
}

std::vector<RogersCheck> rogers_form_checks(Parity parity, int n, Precision p) {
  const Precision wp = p + kExtra;
  const AlgebraicNumber root = isolate_positive_root(family_base(parity, n));
  const BigReal u = root.value(wp);
  const BigReal zeta2 = const_zeta2(wp);
  const auto un = static_cast<unsigned long>(n);
  auto L = [&](unsigned long k) { return rogers_l(pow(u, k), wp); };
  std::vector<RogersCheck> out;
  if (parity == Parity::Even) {
    out.push_back({"stated", "2 L(u^(n+1)) - 2 L(u^n) - L(u) = -zeta(2)",
                   (2 * L(un + 1) - 2 * L(un) - L(1) + zeta2).rounded(p)});
    out.push_back({"derivation-variant", "L(u^(n+1)) - 2 L(u^n) - L(u) = -zeta(2)",
                   (L(un + 1) - 2 * L(un) - L(1) + zeta2).rounded(p)});
  } else {
    out.push_back({"stated", "2 L(u^(n+2)) - 2 L(u^n) - L(u^2) = -zeta(2)",
                   (2 * L(un + 2) - 2 * L(un) - L(2) + zeta2).rounded(p)});
  }
  return out;
}

}  // namespace dilog
