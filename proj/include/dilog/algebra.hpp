#pragma once

// Base-equation constructors, real root isolation and the quotient ring
// Q[x]/(m(x)) used for exact certification.

#include "dilog/bigreal.hpp"
#include "dilog/ratpoly.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace dilog {

/// x^(2n) + ... + x^n - x^(n-1) - ... - x - 1, n >= 1.
RatPoly base_even(int n);
/// x^(2n+1) + ... + x^n - x^(n-1) - ... - x - 1, n >= 1.
RatPoly base_odd(int n);

/// A real root of `defpoly` pinned by a rational isolating interval.
///
/// Invariant: either lo < hi, defpoly(lo) * defpoly(hi) < 0 and (lo, hi)
/// contains exactly one root, or lo == hi is itself an exact rational root.
/// Values are immutable; refine() returns a narrower copy.
class AlgebraicNumber {
 public:
  /// Validates the invariant exactly; throws Error(InvalidArgument) if the
  /// interval does not isolate a single root.
  AlgebraicNumber(RatPoly defpoly, Rational lo, Rational hi);

  const RatPoly& defpoly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  bool is_rational() const { return lo_ == hi_; }

  /// The root to precision p (Newton with bisection fallback inside the
  /// interval). Reuses the cached value when it is precise enough.
  BigReal value(Precision p) const;

  /// Copy whose interval is narrowed to width < 2^-p, carrying the value.
  AlgebraicNumber refine(Precision p) const;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.poly_ == b.poly_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  struct Unchecked {};
  AlgebraicNumber(Unchecked, RatPoly defpoly, Rational lo, Rational hi);

  RatPoly poly_;
  Rational lo_;
  Rational hi_;
  std::shared_ptr<const BigReal> cached_;
};

/// Upper bound for the Descartes sign-variation count of p on (lo, hi);
/// 0 means no root there and 1 means exactly one.
int descartes_count(const RatPoly& p, const Rational& lo, const Rational& hi);

/// All real roots of p in the open interval (lo, hi), ascending, each
/// isolated to width <= max_width. Multiple roots are reported once.
std::vector<AlgebraicNumber> isolate_real_roots(const RatPoly& p, const Rational& lo, const Rational& hi,
                                                const Rational& max_width = Rational(1, 1024));

/// Cauchy bound: every complex root has modulus < the returned value.
Rational root_bound(const RatPoly& p);

/// The largest root in (0, 1) if there is one, otherwise the smallest
/// positive root; isolated coarsely (width <= 1/1024). Throws
/// Error(NoPositiveRoot) when p has no positive real root.
AlgebraicNumber isolate_positive_root(const RatPoly& p);

/// As isolate_positive_root, refined to width < 2^-p.
AlgebraicNumber positive_root(const RatPoly& p, Precision prec);

/// An element of Q[x]/(m). The modulus is shared and immutable.
class Residue {
 public:
  Residue(std::shared_ptr<const RatPoly> modulus, const RatPoly& rep);

  static Residue make(const RatPoly& modulus, const RatPoly& rep);

  const RatPoly& rep() const { return rep_; }
  const RatPoly& modulus() const { return *modulus_; }
  const std::shared_ptr<const RatPoly>& shared_modulus() const { return modulus_; }

  /// The constant c (resp. the class of x) in the same ring.
  Residue constant(const Rational& c) const;
  Residue generator() const;

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, long c) { return a - a.constant(c); }
  friend Residue operator-(long c, const Residue& a) { return a.constant(c) - a; }
  friend Residue operator*(long c, const Residue& a) { return a.constant(c) * a; }
  friend bool operator==(const Residue& a, const Residue& b);

 private:
  std::shared_ptr<const RatPoly> modulus_;
  RatPoly rep_;
};

/// Binary exponentiation in the quotient ring.
Residue pow(const Residue& base, unsigned long k);

}  // namespace dilog
