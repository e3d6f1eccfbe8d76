#include "dilog/numerics.hpp"

#include <stdexcept>
#include <string>

namespace dilog {

namespace {

constexpr mpfr_prec_t kWorkingGuard = 32;
constexpr long kSeriesCutoffExtra = 8;

Precision working(Precision p) { return p + kWorkingGuard; }

// sum_{k>=1} z^k / k^2 for |z| <= 1/2, stopped once a term drops below
// 2^(-wp-8) |z|; the remaining tail is bounded by twice the last term.
BigReal li2_series(const BigReal& z, Precision wp) {
  BigReal sum(wp);
  if (z.is_zero()) return sum;
  const BigReal zz = z.rounded(wp);
  BigReal power = zz;
  BigReal term(wp);
  const long stop = zz.exponent2() - wp.bits - kSeriesCutoffExtra;
  for (unsigned long k = 1;; ++k) {
    if (k > 1) power *= zz;
    mpfr_div_ui(term.raw(), power.raw(), k * k, MPFR_RNDN);
    sum += term;
    if (term.is_zero() || term.exponent2() < stop) break;
  }
  return sum;
}

BigComplex li2_series(const BigComplex& z, Precision wp) {
  BigComplex sum(wp);
  const BigComplex zz = z.rounded(wp);
  BigComplex power = zz;
  const long stop = abs(zz).exponent2() - wp.bits - kSeriesCutoffExtra;
  for (unsigned long k = 1;; ++k) {
    if (k > 1) power = power * zz;
    BigComplex term = power;
    mpfr_div_ui(term.re.raw(), term.re.raw(), k * k, MPFR_RNDN);
    mpfr_div_ui(term.im.raw(), term.im.raw(), k * k, MPFR_RNDN);
    sum = sum + term;
    if (term.is_zero() || abs(term).exponent2() < stop) break;
  }
  return sum;
}

// Li2(z) = w - w^2/4 + sum_{j>=1} (-1)^(j+1) 2 zeta(2j) w^(2j+1) / ((2j+1) (2 pi)^(2j)),
// w = -log(1 - z). Converges for |w| < 2 pi; callers keep |w| below ~1.8.
BigComplex li2_bernoulli(const BigComplex& z, Precision wp) {
  const BigComplex w = -log(BigReal(1, wp) - z);
  const BigReal two_pi = const_pi(wp) * 2;
  const BigComplex q = square(w) * (1 / square(two_pi));
  BigComplex sum = w - square(w) / 4;
  BigComplex power = w;
  const long stop = abs(w).exponent2() - wp.bits - kSeriesCutoffExtra;
  for (unsigned long j = 1;; ++j) {
    power = power * q;
    BigReal scale = zeta_int(2 * j, wp) * 2 / static_cast<long>(2 * j + 1);
    if (j % 2 == 0) scale = -scale;
    const BigComplex term = power * scale;
    sum = sum + term;
    if (term.is_zero() || abs(term).exponent2() < stop) break;
  }
  return sum;
}

BigReal li2_real_working(const BigReal& z, Precision wp) {
  if (z.is_zero()) return BigReal(wp);
  const BigReal pi2_6 = square(const_pi(wp)) / 6;
  if (z == 1) return pi2_6;
  if (z > 1) throw std::domain_error("li2_real: argument must be <= 1");
  if (z < -1) {
    // Inversion: Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z).
    const BigReal inv = BigReal(1, wp) / z;
    return -pi2_6 - square(log(-z.rounded(wp))) / 2 - li2_real_working(inv, wp);
  }
  const BigReal half = BigReal::pow2(-1, wp);
  if (z < -half) {
    // Landen: Li2(z) = -Li2(z/(z-1)) - log^2(1-z)/2, z/(z-1) in [1/3, 1/2].
    const BigReal zz = z.rounded(wp);
    const BigReal one_minus = 1 - zz;
    return -li2_series(zz / (zz - 1), wp) - square(log(one_minus)) / 2;
  }
  if (z <= half) return li2_series(z, wp);
  // Complement: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z).
  const BigReal zz = z.rounded(wp);
  const BigReal one_minus = 1 - zz;
  return pi2_6 - log(zz) * log(one_minus) - li2_series(one_minus, wp);
}

BigComplex li2_complex_working(const BigComplex& z, Precision wp, Li2Route& route) {
  if (z.is_zero()) {
    route = Li2Route::Zero;
    return BigComplex(wp);
  }
  const BigReal pi2_6 = square(const_pi(wp)) / 6;
  const BigReal one(1, wp);
  const BigReal half = BigReal::pow2(-1, wp);
  if (z.im.is_zero()) {
    if (z.re == 1) {
      route = Li2Route::One;
      return BigComplex(pi2_6);
    }
    if (z.re > 1) {
      route = Li2Route::CutLowerSide;
      const BigReal x = z.re.rounded(wp);
      const BigReal lx = log(x);
      BigReal re = pi2_6 * 2 - square(lx) / 2 - li2_real_working(one / x, wp);
      BigReal im = -(const_pi(wp) * lx);
      return {std::move(re), std::move(im)};
    }
  }
  const BigComplex zz = z.rounded(wp);
  const BigReal modulus = abs(zz);
  if (modulus > 1) {
    // Inversion: Li2(z) = -pi^2/6 - log^2(-z)/2 - Li2(1/z), z off the real axis.
    Li2Route inner = Li2Route::Zero;
    const BigComplex inv = BigComplex(one) / zz;
    const BigComplex rest = li2_complex_working(inv, wp, inner);
    route = Li2Route::Inversion;
    const BigComplex l = log(-zz);
    return BigComplex(-pi2_6) - square(l) / 2 - rest;
  }
  if (modulus <= half) {
    route = Li2Route::DirectSeries;
    return li2_series(zz, wp);
  }
  const BigComplex one_minus = one - zz;
  if (abs(one_minus) <= half) {
    route = Li2Route::Complement;
    return BigComplex(pi2_6) - log(zz) * log(one_minus) - li2_series(one_minus, wp);
  }
  const BigComplex landen = zz / (zz - BigComplex(one));
  if (abs(landen) <= half) {
    route = Li2Route::Landen;
    return -li2_series(landen, wp) - square(log(one_minus)) / 2;
  }
  route = Li2Route::BernoulliSeries;
  return li2_bernoulli(zz, wp);
}

// Li_n(z) for 1/2 < z < 1 through the expansion in mu = log z:
// sum_{k != n-1} zeta(n-k) mu^k / k! + mu^(n-1)/(n-1)! (H_{n-1} - log(-mu)).
BigReal li_n_log_expansion(int n, const BigReal& z, Precision wp) {
  const BigReal mu = log(z.rounded(wp));
  BigReal harmonic(wp);
  for (int j = 1; j < n; ++j) harmonic += BigReal(1, wp) / j;
  BigReal sum(wp);
  BigReal power(1, wp);  // mu^k / k!
  BigReal zeta(wp);
  BigReal zeta_arg(wp);
  for (long k = 0;; ++k) {
    if (k > 0) {
      power *= mu;
      power /= k;
    }
    if (k == n - 1) {
      sum += power * (harmonic - log(-mu));
      continue;
    }
    mpfr_set_si(zeta_arg.raw(), n - k, MPFR_RNDN);
    mpfr_zeta(zeta.raw(), zeta_arg.raw(), MPFR_RNDN);
    if (zeta.is_zero()) continue;  // trivial zeros at negative even integers
    const BigReal term = zeta * power;
    sum += term;
    if (k > n + 1 && term.exponent2() < sum.exponent2() - wp.bits - kSeriesCutoffExtra) break;
  }
  return sum;
}

BigReal li_n_working(int n, const BigReal& z, Precision wp) {
  if (n == 1) return -log1p(-z.rounded(wp));
  if (n == 2) return li2_real_working(z, wp);
  if (z.is_zero()) return BigReal(wp);
  if (z == 1) return zeta_int(static_cast<unsigned long>(n), wp);
  if (z == -1) {
    // -(1 - 2^(1-n)) zeta(n)
    return -(1 - BigReal::pow2(1 - n, wp)) * zeta_int(static_cast<unsigned long>(n), wp);
  }
  const BigReal half = BigReal::pow2(-1, wp);
  if (abs(z) <= half) {
    const BigReal zz = z.rounded(wp);
    BigReal sum(wp);
    BigReal power = zz;
    BigReal term(wp);
    mpz_class kn;
    const long stop = zz.exponent2() - wp.bits - kSeriesCutoffExtra;
    for (unsigned long k = 1;; ++k) {
      if (k > 1) power *= zz;
      mpz_ui_pow_ui(kn.get_mpz_t(), k, static_cast<unsigned long>(n));
      mpfr_div_z(term.raw(), power.raw(), kn.get_mpz_t(), MPFR_RNDN);
      sum += term;
      if (term.is_zero() || term.exponent2() < stop) break;
    }
    return sum;
  }
  if (z > 0) return li_n_log_expansion(n, z, wp);
  // Duplication: Li_n(z) = 2^(1-n) Li_n(z^2) - Li_n(-z), with -z in (1/2, 1).
  const BigReal zz = z.rounded(wp);
  return BigReal::pow2(1 - n, wp) * li_n_working(n, square(zz), wp) - li_n_working(n, -zz, wp);
}

}  // namespace

BigReal golden_ratio(Precision p) {
  const Precision wp = working(p);
  return ((sqrt(BigReal(5, wp)) + 1) / 2).rounded(p);
}

BigReal const_zeta2(Precision p) {
  const Precision wp = working(p);
  return (square(const_pi(wp)) / 6).rounded(p);
}

BigReal li2_real(const BigReal& z, Precision p) {
  return li2_real_working(z, working(p)).rounded(p);
}

const char* to_string(Li2Route route) {
  switch (route) {
    case Li2Route::Zero: return "zero";
    case Li2Route::DirectSeries: return "direct-series";
    case Li2Route::Complement: return "complement";
    case Li2Route::Landen: return "landen";
    case Li2Route::BernoulliSeries: return "bernoulli-series";
    case Li2Route::Inversion: return "inversion";
    case Li2Route::CutLowerSide: return "cut-lower-side";
    case Li2Route::One: return "one";
  }
  return "unknown";
}

BigComplex li2_complex(const BigComplex& z, Precision p, Li2Route& route) {
  return li2_complex_working(z, working(p), route).rounded(p);
}

BigComplex li2_complex(const BigComplex& z, Precision p) {
  Li2Route route = Li2Route::Zero;
  return li2_complex(z, p, route);
}

BigReal li_n(int n, const BigReal& z, Precision p) {
  if (n < 1) throw std::domain_error("li_n: order must be >= 1");
  if (abs(z) > 1) throw std::domain_error("li_n: |z| must be <= 1");
  if (n == 1 && z == 1) throw std::domain_error("li_n: Li_1(1) diverges");
  return li_n_working(n, z, working(p)).rounded(p);
}

BigReal rogers_l(const BigReal& x, Precision p) {
  if (x < 0 || x > 1) throw std::domain_error("rogers_l: argument must lie in [0, 1]");
  if (x.is_zero()) return BigReal(p);
  const Precision wp = working(p);
  if (x == 1) return (square(const_pi(wp)) / 6).rounded(p);
  const BigReal xx = x.rounded(wp);
  const BigReal value = li2_real_working(xx, wp) + log(xx) * log1p(-xx) / 2;
  return value.rounded(p);
}

BigReal chi2(const BigReal& z, Precision p) {
  if (abs(z) > 1) throw std::domain_error("chi2: |z| must be <= 1");
  const Precision wp = working(p);
  const BigReal zz = z.rounded(wp);
  return ((li2_real_working(zz, wp) - li2_real_working(-zz, wp)) / 2).rounded(p);
}

}  // namespace dilog
