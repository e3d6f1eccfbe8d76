#pragma once

#include "dilog/bigreal.hpp"

#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>

namespace testing {

using dilog::BigReal;
using dilog::Precision;

inline BigReal ten_pow(long e) {
  BigReal t(10, Precision(64));
  mpfr_pow_si(t.raw(), t.raw(), e, MPFR_RNDN);
  return t;
}

/// |a - b| < 10^(-digits), with a readable failure message.
inline void check_close(const BigReal& a, const BigReal& b, int digits, const std::string& what = {}) {
  const BigReal diff = dilog::abs(a - b);
  INFO(what << ": " << a.to_string(30) << " vs " << b.to_string(30) << ", diff " << diff.to_string(3));
  CHECK(diff < ten_pow(-digits));
}

inline void check_small(const BigReal& x, int digits, const std::string& what = {}) {
  INFO(what << ": " << x.to_string(6));
  CHECK(dilog::abs(x) < ten_pow(-digits));
}

/// Deterministic source of exactly representable reals in (lo, hi).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// A dyadic rational lo + (hi - lo) k / 2^40, never equal to an endpoint.
  BigReal uniform(double lo, double hi, Precision p) {
    std::uniform_int_distribution<std::int64_t> dist(1, (std::int64_t{1} << 40) - 1);
    const mpq_class t(mpz_class(static_cast<long>(dist(rng_))), mpz_class(1) << 40);
    const mpq_class q = mpq_class(lo) + (mpq_class(hi) - mpq_class(lo)) * t;
    return BigReal(q, p);
  }

  /// Uniform in (-1, 1) with all p bits random. Dyadic samples from
  /// uniform() carry only 40 bits and so admit small integer relations.
  BigReal dense(Precision p) {
    mpz_class bits(0);
    for (mpfr_prec_t got = 0; got < p.bits + 1; got += 64) {
      bits <<= 64;
      bits += mpz_class(std::to_string(rng_()));
    }
    const mpz_class scale = mpz_class(1) << static_cast<mp_bitcnt_t>(((p.bits + 64) / 64) * 64);
    return BigReal(mpq_class(2 * bits - scale, scale), p);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
