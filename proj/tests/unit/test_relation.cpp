#include "dilog/corpus.hpp"
#include "dilog/errors.hpp"
#include "dilog/numerics.hpp"
#include "dilog/relation.hpp"

#include "support.hpp"

#include <random>

using namespace dilog;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) {
  std::vector<Integer> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_SUITE("relation") {
  TEST_CASE("golden ratio powers") {
    const Precision p = precision_for_digits(80);
    const BigReal phi = golden_ratio(p);
    const std::vector<BigReal> v{BigReal(1, p), phi, square(phi)};
    const PslqOutcome out = pslq(v, p, Integer(10000));
    REQUIRE(out.relation.has_value());
    CHECK(out.relation->coeffs == ints({1, 1, -1}));
    CHECK(out.relation->residual < out.relation->residual_bound);
  }

  TEST_CASE("no relation among 1, sqrt 2, sqrt 3") {
    const Precision p = precision_for_digits(80);
    const std::vector<BigReal> v{BigReal(1, p), sqrt(BigReal(2, p)), sqrt(BigReal(3, p))};
    const PslqOutcome out = pslq(v, p, Integer(1000));
    CHECK_FALSE(out.relation.has_value());
    CHECK(out.exclusion_bound > 1000);
  }

  TEST_CASE("low-precision relations are artefacts of the precision") {
    auto constants = [](Precision p) {
      return std::vector<BigReal>{BigReal(1, p), const_pi(p), exp(BigReal(1, p)), log(BigReal(2, p)),
                                  sqrt(BigReal(5, p))};
    };
    const Precision p(64);
    // 64 bits cannot exclude relations of norm 10^30.
    try {
      const PslqOutcome out = pslq(constants(p), p, Integer("1000000000000000000000000000000"));
      if (out.relation) {
        CHECK(out.relation->residual < out.relation->residual_bound);
        const Precision hi(512);
        const auto v = constants(hi);
        BigReal dot(hi);
        for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * out.relation->coeffs[i];
        CHECK(abs(dot) > BigReal::pow2(-200, hi));
      }
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::PrecisionExhausted);
    }
  }

  TEST_CASE("normalization") {
    std::vector<Integer> a = ints({0, -4, 6, -2});
    normalize_relation(a);
    CHECK(a == ints({0, 2, -3, 1}));
  }

  TEST_CASE("planted relations are recovered 100 of 100") {
    std::mt19937_64 rng(20240607);
    testing::Sampler sampler(99);
    std::uniform_int_distribution<int> dim_dist(2, 10);
    std::uniform_int_distribution<long> coeff_dist(-100, 100);
    const Precision p(256);
    int recovered = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const int dim = dim_dist(rng);
      std::vector<Integer> a;
      for (int i = 0; i < dim; ++i) a.emplace_back(coeff_dist(rng));
      while (a.back() == 0) a.back() = coeff_dist(rng);
      std::vector<BigReal> v;
      BigReal acc(p + 64);
      for (int i = 0; i + 1 < dim; ++i) {
        v.push_back(sampler.dense(p + 64));
        acc += v.back() * a[static_cast<std::size_t>(i)];
      }
      v.push_back((-acc / BigReal(a.back(), p + 64)).rounded(p));
      for (auto& x : v) x = x.rounded(p);
      std::vector<Integer> expected = a;
      normalize_relation(expected);
      const PslqOutcome out = pslq(v, p, Integer(100000));
      INFO("trial " << trial << " dim " << dim);
      CHECK(out.relation.has_value());
      if (out.relation && out.relation->coeffs == expected) ++recovered;
    }
    CHECK(recovered == 100);
  }

  TEST_CASE("rationalize") {
    const Precision p(200);
    const auto q = rationalize(BigReal(mpq_class(3, 4), p), Integer(100));
    REQUIRE(q.has_value());
    CHECK(*q == Rational(3, 4));
    const auto r = rationalize(BigReal(mpq_class(-355, 113), p), Integer(1000));
    REQUIRE(r.has_value());
    CHECK(*r == Rational(-355, 113));
    CHECK_FALSE(rationalize(const_pi(p), Integer(1000000)).has_value());
    CHECK(rationalize(BigReal(0, p), Integer(10)) == Rational(0));
  }

  TEST_CASE("discover reproduces the classical ladders") {
    const Precision p = precision_for_digits(80);
    struct Case {
      const char* name;
      bool unique;
    };
    for (const Case c : {Case{"watson", true}, Case{"loxton", true}, Case{"al-index21", true}}) {
      const Ladder& target = corpus_entry(c.name).ladder;
      std::vector<int> exps;
      for (const auto& t : target.terms()) exps.push_back(t.exponent);
      const Discovery d = discover(target.base(), exps, p, Integer(10000));
      INFO(c.name);
      REQUIRE(d.relation.has_value());
      REQUIRE(d.ladder.has_value());
      CHECK(d.relation->coeffs == relation_vector(target, d.exponents));
      CHECK(d.unique == c.unique);
      testing::check_small(residual(*d.ladder, p), 70, c.name);
    }
  }

  TEST_CASE("coxeter sits in a rank-3 relation lattice") {
    const Ladder& cox = corpus_entry("coxeter").ladder;
    std::vector<int> exps;
    for (const auto& t : cox.terms()) exps.push_back(t.exponent);
    const Precision p = precision_for_digits(80);
    const Discovery d = discover(cox.base(), exps, p, Integer(10000));
    REQUIRE(d.relation.has_value());
    CHECK_FALSE(d.unique);
    CHECK_FALSE(d.alternate.empty());

    const BigReal u = cox.base().value(p + 64);
    std::vector<BigReal> v;
    for (int r : d.exponents) v.push_back(li2_real(pow(u, static_cast<unsigned long>(r)), p));
    v.push_back(square(log(u)).rounded(p));
    v.push_back(const_zeta2(p));
    const auto basis = relation_basis(v, p, Integer(10000));
    // Besides Coxeter: 5 Li2(u^2) + 5 log^2 u = 2 zeta(2), and one more.
    CHECK(basis.size() == 3);
    CHECK(in_rational_span(basis, ints({0, 5, 0, 0, 5, -2})));
    CHECK(in_rational_span(basis, relation_vector(cox, d.exponents)));
    CHECK(in_rational_span(basis, d.relation->coeffs));
    CHECK_FALSE(in_rational_span(basis, ints({1, 0, 0, 0, 0, 0})));
  }

  TEST_CASE("discover agrees with the even theorem for n = 2..10") {
    const Precision p = precision_for_digits(80);
    for (int n = 2; n <= 10; ++n) {
      const Discovery d = discover(base_even(n), {1, n, n + 1}, p, Integer(10000));
      INFO("n=" << n);
      REQUIRE(d.relation.has_value());
      CHECK(d.unique);
      CHECK(d.relation->coeffs == relation_vector(theorem_even(n), d.exponents));
    }
  }

  TEST_CASE("discover input validation") {
    const Precision p = precision_for_digits(40);
    CHECK_THROWS_AS(discover(RatPoly({1, 1}), {1, 2}, p, Integer(100)), Error);
    CHECK_THROWS_AS(discover(base_even(2), {}, p, Integer(100)), Error);
    CHECK_THROWS_AS(discover(base_even(2), {0, 1}, p, Integer(100)), Error);
  }
}
