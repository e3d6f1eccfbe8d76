#include "dilog/algebra.hpp"

#include "dilog/errors.hpp"

#include <algorithm>
#include <string>

namespace dilog {

namespace {

constexpr int kMaxIsolationDepth = 512;

RatPoly alternating_base(int n, int top) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) coeffs[static_cast<std::size_t>(k)] = k < n ? -1 : 1;
  return RatPoly(std::move(coeffs));
}

void require_positive(int n, const char* what) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + ": n must be >= 1");
}

void isolate(const RatPoly& p, const Rational& lo, const Rational& hi, int depth,
             std::vector<std::pair<Rational, Rational>>& out) {
  const int count = descartes_count(p, lo, hi);
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  if (depth > kMaxIsolationDepth) throw Error(ErrorCode::InvalidArgument, "root isolation did not terminate");
  const Rational mid = (lo + hi) / 2;
  isolate(p, lo, mid, depth + 1, out);
  if (p(mid) == 0) out.emplace_back(mid, mid);
  isolate(p, mid, hi, depth + 1, out);
}

// Shrinks an open interval holding exactly one root until both endpoints
// are non-roots and the width is at most max_width. Returns [r, r] if an
// exact rational root is hit.
std::pair<Rational, Rational> tighten(const RatPoly& p, Rational lo, Rational hi, const Rational& max_width) {
  int s_lo = sgn(p(lo));
  int s_hi = sgn(p(hi));
  while (s_lo == 0 || s_hi == 0 || hi - lo > max_width) {
    const Rational mid = (lo + hi) / 2;
    const int s_mid = sgn(p(mid));
    if (s_mid == 0) return {mid, mid};
    bool left;
    if (s_lo != 0 && s_hi != 0) {
      left = s_lo != s_mid;
    } else {
      left = descartes_count(p, lo, mid) == 1;
    }
    if (left) {
      hi = mid;
      s_hi = s_mid;
    } else {
      lo = mid;
      s_lo = s_mid;
    }
  }
  return {lo, hi};
}

}  // namespace

RatPoly base_even(int n) {
  require_positive(n, "base_even");
  return alternating_base(n, 2 * n);
}

RatPoly base_odd(int n) {
  require_positive(n, "base_odd");
  return alternating_base(n, 2 * n + 1);
}

int descartes_count(const RatPoly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) return 0;
  // q(x) = p(lo + (hi - lo) x); roots in (lo, hi) map to (0, 1), and
  // (1 + x)^d q(1/(1 + x)) maps those to (0, inf).
  const RatPoly shifted = taylor_shift(p, lo);
  std::vector<Rational> c = shifted.coefficients();
  const Rational width = hi - lo;
  Rational scale(1);
  for (auto& coeff : c) {
    coeff *= scale;
    scale *= width;
  }
  std::reverse(c.begin(), c.end());
  return taylor_shift(RatPoly(std::move(c)), Rational(1)).sign_variations();
}

std::vector<AlgebraicNumber> isolate_real_roots(const RatPoly& p, const Rational& lo, const Rational& hi,
                                                const Rational& max_width) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot isolate roots of the zero polynomial");
  if (!(lo < hi)) return {};
  const RatPoly sqf = squarefree_part(p);
  std::vector<std::pair<Rational, Rational>> intervals;
  isolate(sqf, lo, hi, 0, intervals);
  std::vector<AlgebraicNumber> out;
  out.reserve(intervals.size());
  for (const auto& [a, b] : intervals) {
    const auto [l, h] = a == b ? std::pair{a, b} : tighten(sqf, a, b, max_width);
    out.emplace_back(sqf, l, h);
  }
  return out;
}

Rational root_bound(const RatPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational best(0);
  for (int k = 0; k < p.degree(); ++k) best = std::max(best, Rational(abs(p.coeff(k) / p.leading())));
  return best + 1;
}

AlgebraicNumber isolate_positive_root(const RatPoly& p) {
  if (p.degree() < 1) throw Error(ErrorCode::NoPositiveRoot, "constant polynomial has no positive root");
  auto unit = isolate_real_roots(p, Rational(0), Rational(1));
  if (!unit.empty()) return unit.back();
  const RatPoly sqf = squarefree_part(p);
  if (sqf(Rational(1)) == 0) return AlgebraicNumber(sqf, Rational(1), Rational(1));
  auto above = isolate_real_roots(p, Rational(1), root_bound(p));
  if (above.empty()) throw Error(ErrorCode::NoPositiveRoot, "no positive real root of " + p.to_string());
  return above.front();
}

AlgebraicNumber positive_root(const RatPoly& p, Precision prec) { return isolate_positive_root(p).refine(prec); }

AlgebraicNumber::AlgebraicNumber(RatPoly defpoly, Rational lo, Rational hi)
    : poly_(std::move(defpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (poly_.degree() < 1) throw Error(ErrorCode::InvalidArgument, "defining polynomial must be non-constant");
  if (lo_ == hi_) {
    if (poly_(lo_) != 0) throw Error(ErrorCode::InvalidArgument, "degenerate interval is not a root");
    return;
  }
  if (!(lo_ < hi_)) throw Error(ErrorCode::InvalidArgument, "interval endpoints out of order");
  if (sgn(poly_(lo_)) * sgn(poly_(hi_)) >= 0) {
    throw Error(ErrorCode::InvalidArgument, "no sign change of " + poly_.to_string() + " on [" + lo_.get_str() +
                                                ", " + hi_.get_str() + "]");
  }
  if (descartes_count(squarefree_part(poly_), lo_, hi_) != 1) {
    throw Error(ErrorCode::InvalidArgument, "interval [" + lo_.get_str() + ", " + hi_.get_str() +
                                                "] does not isolate a single root of " + poly_.to_string());
  }
}

AlgebraicNumber::AlgebraicNumber(Unchecked, RatPoly defpoly, Rational lo, Rational hi)
    : poly_(std::move(defpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

BigReal AlgebraicNumber::value(Precision p) const {
  if (cached_ && cached_->precision() >= p) return cached_->rounded(p);
  if (is_rational()) return BigReal(lo_, p);
  const Precision wp = p + 32;
  const RatPoly deriv = poly_.derivative();
  const int sign_lo = sgn(poly_(lo_));
  BigReal a(lo_, wp);
  BigReal b(hi_, wp);
  BigReal x = (a + b) / 2;
  const long max_iterations = wp.bits + 128;
  for (long iter = 0; iter < max_iterations; ++iter) {
    const BigReal fx = poly_(x);
    if (fx.is_zero()) break;
    if (fx.sign() == sign_lo) {
      a = x;
    } else {
      b = x;
    }
    const BigReal dfx = deriv(x);
    BigReal next = dfx.is_zero() ? (a + b) / 2 : x - fx / dfx;
    if (!(a < next && next < b)) next = (a + b) / 2;
    const BigReal step = abs(next - x);
    x = std::move(next);
    if (step.is_zero() || step.exponent2() < x.exponent2() - wp.bits + 4) break;
    if ((b - a).exponent2() < x.exponent2() - wp.bits + 2) break;
  }
  return x.rounded(p);
}

AlgebraicNumber AlgebraicNumber::refine(Precision p) const {
  const Rational target(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(p.bits));
  if (is_rational() || width() < target) {
    AlgebraicNumber out = *this;
    if (!is_rational()) out.cached_ = std::make_shared<const BigReal>(value(p + 16));
    return out;
  }
  const BigReal x = value(p + 16);
  const mp_bitcnt_t s = static_cast<mp_bitcnt_t>(p.bits) + 2;
  const Integer m = floor_to_integer(x * BigReal::pow2(static_cast<long>(s), x.precision()));
  const Integer denom = Integer(1) << s;
  Rational lo(m - 1, denom);
  Rational hi(m + 2, denom);
  lo.canonicalize();
  hi.canonicalize();
  lo = std::max(lo, lo_);
  hi = std::min(hi, hi_);
  if (lo < hi && sgn(poly_(lo)) * sgn(poly_(hi)) < 0) {
    AlgebraicNumber out(Unchecked{}, poly_, lo, hi);
    out.cached_ = std::make_shared<const BigReal>(x);
    return out;
  }
  // Numeric value disagreed with the exact signs; fall back to bisection.
  const auto [l, h] = tighten(poly_, lo_, hi_, target / 2);
  AlgebraicNumber out(Unchecked{}, poly_, l, h);
  if (!out.is_rational()) out.cached_ = std::make_shared<const BigReal>(out.value(p + 16));
  return out;
}

Residue::Residue(std::shared_ptr<const RatPoly> modulus, const RatPoly& rep) : modulus_(std::move(modulus)) {
  if (!modulus_ || modulus_->degree() < 1) throw Error(ErrorCode::InvalidArgument, "residue modulus must have degree >= 1");
  rep_ = rep.degree() >= modulus_->degree() ? rep % *modulus_ : rep;
}

Residue Residue::make(const RatPoly& modulus, const RatPoly& rep) {
  return Residue(std::make_shared<const RatPoly>(modulus), rep);
}

Residue Residue::constant(const Rational& c) const { return Residue(modulus_, RatPoly::constant(c)); }

Residue Residue::generator() const { return Residue(modulus_, RatPoly::monomial(Rational(1), 1)); }

namespace {

void require_same_ring(const Residue& a, const Residue& b) {
  if (a.shared_modulus() != b.shared_modulus() && a.modulus() != b.modulus()) {
    throw Error(ErrorCode::InvalidArgument, "residues belong to different quotient rings");
  }
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same_ring(a, b);
  return Residue(a.modulus_, a.rep_ + b.rep_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_ring(a, b);
  return Residue(a.modulus_, a.rep_ - b.rep_);
}

Residue operator*(const Residue& a, const Residue& b) {
  require_same_ring(a, b);
  return Residue(a.modulus_, a.rep_ * b.rep_);
}

bool operator==(const Residue& a, const Residue& b) {
  return (a.modulus_ == b.modulus_ || *a.modulus_ == *b.modulus_) && a.rep_ == b.rep_;
}

Residue pow(const Residue& base, unsigned long k) {
  Residue result = base.constant(Rational(1));
  Residue square = base;
  while (k > 0) {
    if (k & 1UL) result = result * square;
    k >>= 1;
    if (k > 0) square = square * square;
  }
  return result;
}

}  // namespace dilog
