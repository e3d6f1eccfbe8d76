#include "dilog/numerics.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <stdexcept>

using namespace dilog;
using testing::check_close;
using testing::check_small;

namespace {

const Precision kP70 = precision_for_digits(70);

// Direct partial sums of sum z^k / k^n; the oracle that bypasses every
// argument reduction. Only for |z| <= 0.9.
BigReal brute_series(int n, const BigReal& z, Precision p) {
  BigReal sum(p);
  BigReal power(1, p);
  const long cutoff = -static_cast<long>(p.bits) - 8;
  for (unsigned long k = 1;; ++k) {
    power *= z;
    BigReal term = power;
    for (int i = 0; i < n; ++i) term /= static_cast<long>(k);
    sum += term;
    if (term.is_zero() || term.exponent2() < cutoff) break;
  }
  return sum;
}

}  // namespace

TEST_SUITE("numerics") {
  TEST_CASE("constants") {
    const Precision p(400);
    check_close(const_zeta2(p), square(const_pi(p)) / 6, 115, "zeta(2)");
    check_close(zeta_int(2, p), const_zeta2(p), 115, "zeta_int(2)");
    const BigReal phi = golden_ratio(p);
    check_close(square(phi), phi + 1, 115, "phi^2 = phi + 1");
  }

  TEST_CASE("li2_real matches frozen oracle values") {
    for (const auto& pt : oracles::kLi2Real) {
      const BigReal z = BigReal::parse(pt.z, kP70 + 64);
      check_close(li2_real(z, kP70), BigReal::parse(pt.li2, kP70), 66, std::string("Li2(") + pt.z + ")");
    }
  }

  TEST_CASE("li2_real special values") {
    const Precision p(300);
    CHECK(li2_real(BigReal(0, p), p).is_zero());
    const BigReal half(mpq_class(1, 2), p);
    const BigReal ln2 = log(BigReal(2, p));
    check_close(li2_real(half, p), square(const_pi(p)) / 12 - square(ln2) / 2, 85, "Li2(1/2)");
    const BigReal inv_phi2 = BigReal(1, p) / square(golden_ratio(p));
    check_close(li2_real(inv_phi2, p), square(const_pi(p)) / 15 - square(log(golden_ratio(p))), 85, "Li2(1/phi^2)");
    const BigReal inv_phi = BigReal(1, p) / golden_ratio(p);
    check_close(li2_real(inv_phi, p), square(const_pi(p)) / 10 - square(log(golden_ratio(p))), 85, "Li2(1/phi)");
  }

  TEST_CASE("li2_real rejects arguments above 1") {
    CHECK_THROWS_AS(li2_real(BigReal::parse("1.0001", Precision(100)), Precision(100)), std::domain_error);
  }

  TEST_CASE("li2_real agrees with brute-force series") {
    testing::Sampler s(11);
    const Precision p(200);
    for (int i = 0; i < 40; ++i) {
      const BigReal z = s.uniform(-0.9, 0.9, p);
      check_close(li2_real(z, p), brute_series(2, z, p + 32), 55, "series at " + z.to_string(10));
    }
  }

  TEST_CASE("li2_complex matches frozen oracle values") {
    for (const auto& pt : oracles::kLi2Complex) {
      const BigComplex z(BigReal::parse(pt.re, kP70 + 64), BigReal::parse(pt.im, kP70 + 64));
      const BigComplex v = li2_complex(z, kP70);
      const std::string where = std::string("Li2(") + pt.re + " + " + pt.im + "i)";
      check_close(v.re, BigReal::parse(pt.li2_re, kP70), 66, where + " re");
      check_close(v.im, BigReal::parse(pt.li2_im, kP70), 66, where + " im");
    }
  }

  TEST_CASE("li2_complex at i gives Catalan and -pi^2/48") {
    const Precision p(250);
    const BigComplex v = li2_complex(BigComplex(BigReal(0, p), BigReal(1, p)), p);
    check_close(v.im, BigReal::parse(oracles::kCatalan, p), 68, "Catalan");
    check_close(v.re, -square(const_pi(p)) / 48, 70, "-pi^2/48");
  }

  TEST_CASE("li2_complex is consistent with the real path and reports routes") {
    const Precision p(200);
    testing::Sampler s(5);
    for (int i = 0; i < 20; ++i) {
      const BigReal x = s.uniform(-3.0, 1.0, p);
      const BigComplex v = li2_complex(BigComplex(x), p);
      check_close(v.re, li2_real(x, p), 55, "real axis");
      check_small(v.im, 55, "real axis imaginary part");
    }
    Li2Route route{};
    li2_complex(BigComplex(BigReal(0, p)), p, route);
    CHECK(route == Li2Route::Zero);
    li2_complex(BigComplex(BigReal::parse("0.1", p), BigReal::parse("0.1", p)), p, route);
    CHECK(route == Li2Route::DirectSeries);
    li2_complex(BigComplex(BigReal::parse("0.9", p), BigReal::parse("0.1", p)), p, route);
    CHECK(route == Li2Route::Complement);
    li2_complex(BigComplex(BigReal::parse("3", p), BigReal::parse("1", p)), p, route);
    CHECK(route == Li2Route::Inversion);
    li2_complex(BigComplex(BigReal::parse("2", p)), p, route);
    CHECK(route == Li2Route::CutLowerSide);
    li2_complex(BigComplex(BigReal::parse("0.5", p), BigReal::parse("0.8", p)), p, route);
    CHECK(route == Li2Route::BernoulliSeries);
    CHECK(std::string(to_string(Li2Route::BernoulliSeries)) == "bernoulli-series");
  }

  TEST_CASE("li2_complex conjugate symmetry off the cut") {
    const Precision p(200);
    testing::Sampler s(17);
    for (int i = 0; i < 30; ++i) {
      const BigComplex z(s.uniform(-4, 4, p), s.uniform(-4, 4, p));
      const BigComplex a = li2_complex(z, p);
      const BigComplex b = li2_complex(conj(z), p);
      check_close(a.re, b.re, 55, "re");
      check_close(a.im, -b.im, 55, "im");
    }
  }

  TEST_CASE("li_n matches frozen oracle values") {
    for (const auto& pt : oracles::kLiN) {
      const BigReal z = BigReal::parse(pt.z, kP70 + 64);
      check_close(li_n(pt.n, z, kP70), BigReal::parse(pt.value, kP70), 66,
                  "Li" + std::to_string(pt.n) + "(" + pt.z + ")");
    }
  }

  TEST_CASE("li_n low orders and divergence") {
    const Precision p(200);
    const BigReal z = BigReal::parse("0.37", p);
    check_close(li_n(1, z, p), -log(1 - z), 55, "Li1");
    check_close(li_n(2, z, p), li2_real(z, p), 55, "Li2");
    CHECK_THROWS_AS(li_n(1, BigReal(1, p), p), std::domain_error);
    CHECK_THROWS_AS(li_n(3, BigReal::parse("1.5", p), p), std::domain_error);
    testing::Sampler s(23);
    for (int i = 0; i < 10; ++i) {
      const BigReal x = s.uniform(-0.9, 0.9, p);
      check_close(li_n(4, x, p), brute_series(4, x, p + 32), 55, "Li4 series");
    }
  }

  TEST_CASE("zeta(3) by direct summation with a tail bound") {
    // sum_{k > K} 1/k^3 lies in (1/(2 (K+1)^2), 1/(2 K^2)).
    const Precision p(128);
    const long K = 20000;
    BigReal partial(p);
    for (long k = K; k >= 1; --k) partial += BigReal(1, p) / (BigReal(k, p) * k * k);
    const BigReal lo = partial + BigReal(1, p) / (2 * BigReal((K + 1) * (K + 1), p));
    const BigReal hi = partial + BigReal(1, p) / (2 * BigReal(K * K, p));
    const BigReal z3 = li_n(3, BigReal(1, p), p);
    CHECK(lo < z3);
    CHECK(z3 < hi);
  }

  TEST_CASE("rogers_l values") {
    const Precision p(250);
    CHECK(rogers_l(BigReal(0, p), p).is_zero());
    check_close(rogers_l(BigReal(1, p), p), const_zeta2(p), 70, "L(1)");
    check_close(rogers_l(BigReal(mpq_class(1, 2), p), p), square(const_pi(p)) / 12, 70, "L(1/2)");
    check_close(rogers_l(BigReal(1, p) / golden_ratio(p), p), square(const_pi(p)) / 10, 70, "L(1/phi)");
  }

  TEST_CASE("chi2 values") {
    const Precision p(250);
    CHECK(chi2(BigReal(0, p), p).is_zero());
    check_close(chi2(BigReal(1, p), p), square(const_pi(p)) / 8, 70, "chi2(1)");
    const BigReal u = sqrt(BigReal(2, p)) - 1;
    check_close(chi2(u, p), square(const_pi(p)) / 16 - square(log(u)) / 4, 70, "chi2(sqrt2 - 1)");
  }

  TEST_CASE("precision doubling changes values below the guard bound") {
    testing::Sampler s(29);
    const Precision p(160);
    for (int i = 0; i < 20; ++i) {
      const BigReal z = s.uniform(-20, 1, Precision(400));
      const BigReal lo = li2_real(z, p);
      const BigReal hi = li2_real(z, Precision(320));
      CHECK(abs(lo - hi) < BigReal::pow2(-p.bits + kGuardBits, p) * max(abs(hi), BigReal(1, p)));
    }
  }
}
