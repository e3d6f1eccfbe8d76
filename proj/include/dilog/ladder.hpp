#pragma once

// Polylogarithm ladders in flat normal form:
//
//   sum_r c_r Li_n(u^r) + b log^n(u) + sum_m d_m zeta(m) log^(n-m)(u) = 0
//
// with 0 < u < 1 an algebraic number. Every ladder the library ships or
// generates is stored this way; published two-sided displays are
// transcribed by moving everything to the left.

#include "dilog/algebra.hpp"
#include "dilog/bigreal.hpp"
#include "dilog/certify.hpp"
#include "dilog/ratpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dilog {

struct LadderTerm {
  int exponent = 1;  // r >= 1
  Rational coeff;    // c_r != 0

  friend bool operator==(const LadderTerm&, const LadderTerm&) = default;
};

struct ZetaTerm {
  int m = 2;
  Rational coeff;

  friend bool operator==(const ZetaTerm&, const ZetaTerm&) = default;
};

class Ladder {
 public:
  /// Merges terms that share an exponent, drops terms that cancel, and
  /// sorts by descending exponent. Throws Error(InvalidArgument) on a
  /// weight below 2, an exponent below 1, or a zeta index outside [2, weight].
  Ladder(int weight, AlgebraicNumber base, std::vector<LadderTerm> terms, Rational log_coeff,
         std::vector<ZetaTerm> zeta_terms, std::string name = {});

  int weight() const { return weight_; }
  /// Largest exponent carrying a nonzero coefficient (0 for an empty ladder).
  int index() const;
  const AlgebraicNumber& base() const { return base_; }
  const std::vector<LadderTerm>& terms() const { return terms_; }
  const Rational& log_coeff() const { return log_coeff_; }
  const std::vector<ZetaTerm>& zeta_terms() const { return zeta_terms_; }
  const std::string& name() const { return name_; }

  /// Coefficient of Li_n(u^r), zero when absent.
  Rational coeff(int exponent) const;
  /// d_m, zero when absent.
  Rational zeta_coeff(int m) const;

  Ladder renamed(std::string name) const;

  friend bool operator==(const Ladder&, const Ladder&) = default;

 private:
  int weight_;
  AlgebraicNumber base_;
  std::vector<LadderTerm> terms_;
  Rational log_coeff_;
  std::vector<ZetaTerm> zeta_terms_;
  std::string name_;
};

/// Signed value of the left-hand side at precision p. A valid ladder gives
/// |residual| < 2^(-p + kGuardBits) (times the coefficient scale).
BigReal residual(const Ladder& ladder, Precision p);

/// 2 Li2(u^(n+1)) - 2 Li2(u^n) - Li2(u) - n^2 log^2 u + zeta(2) = 0,
/// u the positive root of base_even(n).
Ladder theorem_even(int n);
/// 2 Li2(u^(n+2)) - 2 Li2(u^n) - Li2(u^2) - n^2 log^2 u + zeta(2) = 0,
/// u the positive root of base_odd(n).
Ladder theorem_odd(int n);
Ladder theorem_ladder(Parity parity, int n);

/// Abel four-term family on u^p + u^q - u^n - 1 = 0:
/// Li2(u^(n-p-q)) - Li2(u^(n-p)) - Li2(u^(n-q)) + Li2(u^p) + Li2(u^q)
///   + p q log^2 u - zeta(2) = 0.
/// Throws Error(InvalidExponents) unless p, q >= 1 and p + q < n, and
/// Error(NoInteriorRoot) if the base has no root strictly inside (0, 1).
Ladder abel_four_term(int n, int p, int q);

struct Classification {
  bool restricted = false;  // exponents all divide the index; only zeta(2)
  bool valid = false;       // every d_m is rational
};

/// Structural classification; never evaluates a special function.
Classification classify(const Ladder& ladder);

/// Numeric validity check: recomputes d_2 from the Li2 and log terms,
/// rationalizes it with denominators up to max_den and compares with the
/// stored value. Returns the recovered rational, if any.
std::optional<Rational> recover_zeta2_coeff(const Ladder& ladder, Precision p, const Integer& max_den);

}  // namespace dilog
