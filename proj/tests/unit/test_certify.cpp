#include "dilog/algebra.hpp"
#include "dilog/certify.hpp"
#include "dilog/errors.hpp"

#include "support.hpp"

using namespace dilog;

TEST_SUITE("certify") {
  TEST_CASE("parity parsing") {
    CHECK(parse_parity("even") == Parity::Even);
    CHECK(parse_parity("odd") == Parity::Odd);
    CHECK(std::string(to_string(Parity::Odd)) == "odd");
    CHECK_THROWS_AS(parse_parity("neither"), Error);
  }

  TEST_CASE("exact certificates for small n") {
    for (int n = 1; n <= 8; ++n) {
      for (Parity parity : {Parity::Even, Parity::Odd}) {
        const CertReport steps = verify_step_identities(n, parity);
        const CertReport cyc = verify_cyclotomic(n, parity);
        INFO(to_string(parity) << " n=" << n);
        CHECK(steps.all_pass());
        CHECK(cyc.all_pass());
        CHECK(steps.entries.size() == 3);
        CHECK(cyc.entries.size() == (parity == Parity::Even ? 1u : 2u));
        CHECK(steps.modulus == family_base(parity, n));
      }
    }
  }

  TEST_CASE("numeric cross-check over the reals") {
    const Precision p(256);
    for (int n = 1; n <= 10; ++n) {
      for (Parity parity : {Parity::Even, Parity::Odd}) {
        const BigReal u = positive_root(family_base(parity, n), p).value(p);
        const BigReal one(1, p);
        auto all = step_identities<BigReal>(parity, n, u, one);
        for (auto& id : cyclotomic_identities<BigReal>(parity, n, u, one)) all.push_back(std::move(id));
        for (const auto& id : all) {
          testing::check_small(id.lhs - id.rhs, 60, id.name);
        }
      }
    }
  }

  TEST_CASE("identities fail under the wrong modulus") {
    // Swapping the base for the other parity breaks every congruence.
    for (int n = 2; n <= 5; ++n) {
      const Residue u = Residue::make(base_odd(n), RatPoly({0, 1}));
      const Residue one = u.constant(1);
      for (const auto& id : step_identities<Residue>(Parity::Even, n, u, one)) {
        INFO(id.name << " n=" << n);
        CHECK_FALSE(id.lhs == id.rhs);
      }
      for (const auto& id : cyclotomic_identities<Residue>(Parity::Even, n, u, one)) {
        CHECK_FALSE(id.lhs == id.rhs);
      }
    }
  }
}
