#include "dilog/corpus.hpp"
#include "dilog/errors.hpp"
#include "dilog/ladder.hpp"
#include "dilog/numerics.hpp"
#include "dilog/relation.hpp"
#include "dilog/special.hpp"

#include "support.hpp"

using namespace dilog;
using testing::check_small;

TEST_SUITE("ladders") {
  TEST_CASE("every corpus ladder vanishes at its default precision") {
    CHECK(corpus().size() >= 10);
    for (const auto& entry : corpus()) {
      const Precision p = precision_for_digits(entry.default_digits);
      check_small(residual(entry.ladder, p), entry.default_digits - 10, entry.name);
      CHECK(entry.ladder.weight() == 2);
      CHECK_FALSE(entry.source.empty());
    }
  }

  TEST_CASE("corpus lookup normalizes names") {
    CHECK(corpus_entry("Kummer_Rogers_Quartic").name == "kummer-rogers-quartic");
    CHECK(corpus_entry("coxeter").ladder.zeta_coeff(2) == Rational(-7, 5));
    CHECK(corpus_entry("watson").ladder.zeta_coeff(2) == Rational(1, 7));
    CHECK(corpus_entry("loxton").ladder.zeta_coeff(2) == Rational(5));
    const Ladder& bb = corpus_entry("bailey-broadhurst").ladder;
    CHECK(bb.log_coeff() == Rational(-22050));
    CHECK(bb.zeta_coeff(2) == Rational(2003));
    CHECK_THROWS_AS(corpus_entry("no-such-ladder"), Error);
    CHECK_FALSE(corpus_entry("al-w-quintic").open_question.empty());
  }

  TEST_CASE("a perturbed coefficient breaks the ladder") {
    // Bailey-Broadhurst evaluates to exactly zero at 120 digits; make sure
    // that is not an artefact of the residual computation.
    const Ladder& bb = corpus_entry("bailey-broadhurst").ladder;
    std::vector<LadderTerm> terms = bb.terms();
    terms.back().coeff += 1;  // lowest exponent, largest Li2 value
    const Ladder broken(2, bb.base(), terms, bb.log_coeff(), bb.zeta_terms());
    const BigReal r = residual(broken, precision_for_digits(120));
    CHECK(abs(r) > testing::ten_pow(-3));

    const Ladder shifted(2, bb.base(), bb.terms(), bb.log_coeff() + 1, bb.zeta_terms());
    CHECK(abs(residual(shifted, precision_for_digits(120))) > testing::ten_pow(-5));
  }

  TEST_CASE("theorem ladders merge coinciding exponents") {
    const Ladder even1 = theorem_even(1);
    CHECK(even1.terms().size() == 2);
    CHECK(even1.coeff(2) == Rational(2));
    CHECK(even1.coeff(1) == Rational(-3));
    const Ladder odd2 = theorem_odd(2);
    CHECK(odd2.terms().size() == 2);
    CHECK(odd2.coeff(4) == Rational(2));
    CHECK(odd2.coeff(2) == Rational(-3));
    CHECK(odd2.index() == 4);
    CHECK(theorem_even(5).terms().size() == 3);
    CHECK(theorem_even(5) == corpus_entry("motivating").ladder.renamed("theorem-even-5"));
  }

  TEST_CASE("theorem families vanish for n up to 40") {
    const Precision p(200);
    for (int n = 1; n <= 40; ++n) {
      check_small(residual(theorem_even(n), p), 50, "even n=" + std::to_string(n));
      check_small(residual(theorem_odd(n), p), 50, "odd n=" + std::to_string(n));
    }
  }

  TEST_CASE("abel four-term family") {
    const Precision p(200);
    check_small(residual(abel_four_term(3, 1, 1), p), 50, "(3,1,1)");
    check_small(residual(abel_four_term(4, 1, 2), p), 50, "(4,1,2)");
    check_small(residual(abel_four_term(7, 2, 3), p), 50, "(7,2,3)");
    try {
      abel_four_term(3, 2, 2);
      FAIL("expected InvalidExponents");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidExponents);
    }
    CHECK_THROWS_AS(abel_four_term(5, 0, 1), Error);
  }

  TEST_CASE("ladder construction rules") {
    const AlgebraicNumber u = isolate_positive_root(base_even(1));
    const Ladder l(2, u, {{1, Rational(1)}, {1, Rational(-1)}, {3, Rational(2)}}, Rational(0), {});
    CHECK(l.terms().size() == 1);
    CHECK(l.index() == 3);
    CHECK_THROWS_AS(Ladder(1, u, {}, Rational(0), {}), Error);
    CHECK_THROWS_AS(Ladder(2, u, {{0, Rational(1)}}, Rational(0), {}), Error);
    CHECK_THROWS_AS(Ladder(2, u, {}, Rational(0), {{3, Rational(1)}}), Error);
  }

  TEST_CASE("classification is structural") {
    for (const char* name : {"loxton", "motivating", "bailey-broadhurst"}) {
      const Classification c = classify(corpus_entry(name).ladder);
      INFO(name);
      CHECK_FALSE(c.restricted);
      CHECK(c.valid);
    }
    const AlgebraicNumber u = isolate_positive_root(base_even(1));
    const Ladder divisors(2, u, {{6, Rational(1)}, {3, Rational(-2)}, {2, Rational(1)}}, Rational(1), {{2, Rational(1)}});
    CHECK(classify(divisors).restricted);
  }

  TEST_CASE("recovering the zeta(2) coefficient") {
    const Precision p = precision_for_digits(60);
    const auto coxeter = recover_zeta2_coeff(corpus_entry("coxeter").ladder, p, Integer(1000));
    REQUIRE(coxeter.has_value());
    CHECK(*coxeter == Rational(-7, 5));
    const auto watson = recover_zeta2_coeff(corpus_entry("watson").ladder, p, Integer(1000));
    REQUIRE(watson.has_value());
    CHECK(*watson == Rational(1, 7));
  }

  TEST_CASE("special relations") {
    const Precision p = precision_for_digits(100);
    const KhoiReport khoi = verify_khoi(p);
    // The two independent evaluation routes agree with each other.
    check_small(khoi.lhs - khoi.lima_route, 90, "khoi routes");
    check_small(khoi.lima_argument_gap, 90, "khoi argument gap");
    check_small(khoi.lhs - khoi.target - khoi.residual, 90, "khoi residual definition");

    for (const char* z : {"0.001", "0.3", "0.5", "0.77", "0.999"}) {
      check_small(verify_lima(BigReal::parse(z, p), p).residual, 90, z);
    }
    CHECK_THROWS_AS(verify_lima(BigReal(1, p), p), Error);
    CHECK_THROWS_AS(verify_lima(BigReal(0, p), p), Error);

    const ConjectureReport conj = verify_conjecture(p);
    check_small(conj.second_modulus - golden_ratio(p), 90, "second modulus");
    CHECK_FALSE(conj.branch.empty());
    CHECK(conj.rhs.re.is_finite());

    for (Parity parity : {Parity::Even, Parity::Odd}) {
      for (int n = 1; n <= 6; ++n) {
        for (const RogersCheck& c : rogers_form_checks(parity, n, p)) {
          INFO(to_string(parity) << " n=" << n << " " << c.label);
          if (c.label == "stated") check_small(c.residual, 90, c.statement);
        }
      }
    }
  }
}
