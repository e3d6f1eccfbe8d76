#pragma once

// Dense univariate polynomials over Q with exact GMP rationals.

#include "dilog/bigreal.hpp"

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dilog {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "p/q" or a finite decimal ("0.25"); accepts U+2212 as minus.
Rational parse_rational(std::string_view text);

/// Coefficients are stored in ascending degree order with the leading
/// coefficient nonzero; the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> ascending);
  RatPoly(std::initializer_list<long> ascending);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int degree);
  /// Comma-separated ascending coefficients, e.g. "-1,-1,1" for x^2 - x - 1.
  static RatPoly parse(std::string_view csv);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  BigReal operator()(const BigReal& x) const;

  RatPoly derivative() const;
  /// Sign changes in the coefficient sequence (zeros skipped).
  int sign_variations() const;
  /// Human-readable form such as "x^2 + x - 1".
  std::string to_string() const;
  /// Comma-separated ascending coefficients (inverse of parse).
  std::string to_csv() const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& c);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division a = q b + r with deg r < deg b. Throws on b == 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
/// Monic gcd (zero if both are zero).
RatPoly gcd(RatPoly a, RatPoly b);
/// p / gcd(p, p'); returns p unchanged when it is already squarefree.
RatPoly squarefree_part(const RatPoly& p);
/// p(x + shift).
RatPoly taylor_shift(const RatPoly& p, const Rational& shift);

}  // namespace dilog
