#pragma once

// Precision-parameterized real and complex numbers backed by MPFR.
//
// Every BigReal carries its own precision; there is no ambient default.
// Binary operations produce a result at the larger of the operand
// precisions and are correctly rounded (round-to-nearest) by MPFR, so each
// elementary step has relative error <= 2^-p. Composite special functions
// (numerics.hpp) carry their own guard bits and promise 2^(-p + kGuardBits).

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>

namespace dilog {

/// Guard bits in the documented error bound 2^(-p + kGuardBits).
inline constexpr int kGuardBits = 16;

/// Working precision in bits.
struct Precision {
  mpfr_prec_t bits = 64;

  constexpr Precision() = default;
  constexpr explicit Precision(mpfr_prec_t b) : bits(b) {}

  friend constexpr Precision operator+(Precision p, mpfr_prec_t extra) {
    return Precision(p.bits + extra);
  }
  friend constexpr auto operator<=>(Precision, Precision) = default;
};

/// Bits needed for `digits` significant decimals plus 64 guard bits.
Precision precision_for_digits(int digits);

enum class Notation { Scientific, Fixed };

class BigReal {
 public:
  explicit BigReal(Precision p);
  BigReal(long value, Precision p);
  BigReal(const mpz_class& value, Precision p);
  BigReal(const mpq_class& value, Precision p);
  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Parses a decimal literal ("0.3", "-1e-5"); throws std::invalid_argument.
  static BigReal parse(std::string_view text, Precision p);
  /// 2^exponent, exact.
  static BigReal pow2(long exponent, Precision p);

  Precision precision() const { return Precision(mpfr_get_prec(value_)); }
  BigReal rounded(Precision p) const;

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent2() const;

  /// Round-to-nearest decimal rendering with `digits` significant
  /// (Scientific) or fractional (Fixed) digits.
  std::string to_string(int digits, Notation notation = Notation::Scientific) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator-(const BigReal& x);
  friend BigReal operator+(const BigReal& a, const BigReal& b);
  friend BigReal operator-(const BigReal& a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const BigReal& b);
  friend BigReal operator/(const BigReal& a, const BigReal& b);
  friend BigReal operator+(const BigReal& a, long b);
  friend BigReal operator-(const BigReal& a, long b);
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, long b);
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(const BigReal& a, long b);
  friend BigReal operator/(long a, const BigReal& b);
  friend BigReal operator*(const BigReal& a, const mpz_class& b);
  friend BigReal operator*(const BigReal& a, const mpq_class& b);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& x, unsigned long k);
BigReal square(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);
/// Nearest integer, ties away from zero.
mpz_class round_to_integer(const BigReal& x);
mpz_class floor_to_integer(const BigReal& x);
/// Exact conversion; x must be finite.
mpq_class to_rational(const BigReal& x);

BigReal const_pi(Precision p);
/// Riemann zeta at a positive integer argument s >= 2.
BigReal zeta_int(unsigned long s, Precision p);

/// x + iy with both components at their own precision.
struct BigComplex {
  BigReal re;
  BigReal im;

  explicit BigComplex(Precision p) : re(p), im(p) {}
  BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(BigReal r) : re(std::move(r)), im(re.precision()) {}

  Precision precision() const { return std::max(re.precision(), im.precision()); }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  BigComplex rounded(Precision p) const { return {re.rounded(p), im.rounded(p)}; }

  friend BigComplex operator-(const BigComplex& z) { return {-z.re, -z.im}; }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigReal& b) { return {a.re * b, a.im * b}; }
  friend BigComplex operator*(const BigComplex& a, long b) { return {a.re * b, a.im * b}; }
  friend BigComplex operator/(const BigComplex& a, long b) { return {a.re / b, a.im / b}; }
  friend BigComplex operator+(const BigComplex& a, const BigReal& b) { return {a.re + b, a.im}; }
  friend BigComplex operator-(const BigReal& a, const BigComplex& b) { return {a - b.re, -b.im}; }
};

BigReal abs(const BigComplex& z);
BigReal arg(const BigComplex& z);
BigComplex conj(const BigComplex& z);
BigComplex square(const BigComplex& z);
/// Principal logarithm; arg in (-pi, pi].
BigComplex log(const BigComplex& z);
/// Principal square root (Re >= 0).
BigComplex sqrt(const BigComplex& z);

}  // namespace dilog
