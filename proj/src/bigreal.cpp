#include "dilog/bigreal.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>

namespace dilog {

namespace {

mpfr_prec_t wider(const BigReal& a, const BigReal& b) {
  return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}

}  // namespace

Precision precision_for_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("digit count must be positive");
  const double bits = std::ceil(digits * std::log2(10.0));
  return Precision(static_cast<mpfr_prec_t>(bits) + 64);
}

BigReal::BigReal(Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const mpz_class& value, Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const mpq_class& value, Precision p) {
  mpfr_init2(value_, p.bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::parse(std::string_view text, Precision p) {
  BigReal out(p);
  const std::string s(text);
  if (s.empty() || mpfr_set_str(out.value_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  return out;
}

BigReal BigReal::pow2(long exponent, Precision p) {
  BigReal out(1, p);
  mpfr_mul_2si(out.value_, out.value_, exponent, MPFR_RNDN);
  return out;
}

BigReal BigReal::rounded(Precision p) const {
  BigReal out(p);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

long BigReal::exponent2() const {
  if (mpfr_zero_p(value_)) return std::numeric_limits<long>::min() / 2;
  return mpfr_get_exp(value_);
}

std::string BigReal::to_string(int digits, Notation notation) const {
  char* buffer = nullptr;
  const int n = notation == Notation::Scientific
                    ? mpfr_asprintf(&buffer, "%.*RNe", digits > 0 ? digits - 1 : 0, value_)
                    : mpfr_asprintf(&buffer, "%.*RNf", digits, value_);
  if (n < 0) throw std::runtime_error("decimal rendering failed");
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  if (mpfr_get_prec(rhs.value_) > mpfr_get_prec(value_)) mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  if (mpfr_get_prec(rhs.value_) > mpfr_get_prec(value_)) mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  if (mpfr_get_prec(rhs.value_) > mpfr_get_prec(value_)) mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (mpfr_get_prec(rhs.value_) > mpfr_get_prec(value_)) mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal operator-(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_neg(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
  BigReal out(Precision(wider(a, b)));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
  BigReal out(Precision(wider(a, b)));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
  BigReal out(Precision(wider(a, b)));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
  BigReal out(Precision(wider(a, b)));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator+(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_add_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

BigReal operator-(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_sub_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

BigReal operator-(long a, const BigReal& b) {
  BigReal out(b.precision());
  mpfr_si_sub(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_mul_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

BigReal operator/(const BigReal& a, long b) {
  BigReal out(a.precision());
  mpfr_div_si(out.value_, a.value_, b, MPFR_RNDN);
  return out;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal out(b.precision());
  mpfr_si_div(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, const mpz_class& b) {
  BigReal out(a.precision());
  mpfr_mul_z(out.value_, a.value_, b.get_mpz_t(), MPFR_RNDN);
  return out;
}

BigReal operator*(const BigReal& a, const mpq_class& b) {
  BigReal out(a.precision());
  mpfr_mul_q(out.value_, a.value_, b.get_mpq_t(), MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

BigReal abs(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal sqrt(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal log(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal log1p(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_log1p(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal sin(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_sin(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal cos(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal out(Precision(wider(x, y)));
  mpfr_atan2(out.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal pow(const BigReal& x, unsigned long k) {
  BigReal out(x.precision());
  mpfr_pow_ui(out.raw(), x.raw(), k, MPFR_RNDN);
  return out;
}

BigReal square(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_sqr(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

mpz_class round_to_integer(const BigReal& x) {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), x.raw(), MPFR_RNDNA);
  return out;
}

mpz_class floor_to_integer(const BigReal& x) {
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), x.raw(), MPFR_RNDD);
  return out;
}

mpq_class to_rational(const BigReal& x) {
  if (!x.is_finite()) throw std::domain_error("cannot convert a non-finite value to a rational");
  if (x.is_zero()) return mpq_class(0);
  mpz_class mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), x.raw());
  mpq_class out(mantissa);
  if (e >= 0) {
    mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  out.canonicalize();
  return out;
}

BigReal const_pi(Precision p) {
  BigReal out(p);
  mpfr_const_pi(out.raw(), MPFR_RNDN);
  return out;
}

BigReal zeta_int(unsigned long s, Precision p) {
  if (s < 2) throw std::domain_error("zeta_int needs s >= 2");
  BigReal out(p);
  mpfr_zeta_ui(out.raw(), s, MPFR_RNDN);
  return out;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  const BigReal denom = square(b.re) + square(b.im);
  return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
}

BigReal abs(const BigComplex& z) {
  BigReal out(z.precision());
  mpfr_hypot(out.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return out;
}

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigComplex square(const BigComplex& z) { return z * z; }

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex sqrt(const BigComplex& z) {
  const BigReal r = abs(z);
  if (r.is_zero()) return BigComplex(z.precision());
  // Re = sqrt((r + x)/2), Im = sign(y) sqrt((r - x)/2), arranged to avoid cancellation.
  if (z.re.sign() >= 0) {
    BigReal re = sqrt((r + z.re) / 2);
    BigReal im = z.im / (re * 2);
    return {std::move(re), std::move(im)};
  }
  BigReal im = sqrt((r - z.re) / 2);
  if (z.im.sign() < 0) im = -im;
  BigReal re = z.im / (im * 2);
  return {std::move(re), std::move(im)};
}

}  // namespace dilog
