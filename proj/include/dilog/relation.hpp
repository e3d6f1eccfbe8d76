#pragma once

// Integer relation detection (PSLQ) and experimental ladder discovery.

#include "dilog/algebra.hpp"
#include "dilog/bigreal.hpp"
#include "dilog/errors.hpp"
#include "dilog/ladder.hpp"
#include "dilog/ratpoly.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dilog {

/// An integer vector a with |a . v| below residual_bound. Coefficients are
/// primitive (gcd 1) with the first nonzero entry positive.
struct RelationResult {
  std::vector<Integer> coeffs;
  BigReal residual_bound;  // 2^(-p/2) ||v||, the acceptance threshold
  BigReal residual;        // |a . v| as evaluated at precision_used
  long iterations = 0;
  mpfr_prec_t precision_used = 0;
};

struct PslqOutcome {
  std::optional<RelationResult> relation;
  /// Without a relation: no integer relation among the given
  /// approximations has Euclidean norm below this value.
  BigReal exclusion_bound;
  long iterations = 0;
};

struct PslqOptions {
  long max_iterations = 1'000'000;
};

/// Single-level PSLQ with gamma = sqrt(4/3).
///
/// Every v[i] must be nonzero and known to at least p bits. Returns a
/// relation with Euclidean norm <= max_norm, or no relation together with
/// the min-diagonal exclusion bound once that bound passes max_norm.
/// Throws Error(PrecisionExhausted) when the multiplier matrix outgrows
/// the working precision before either outcome is reached.
PslqOutcome pslq(std::span<const BigReal> v, Precision p, const Integer& max_norm, PslqOptions options = {});

/// Divides by the gcd and makes the first nonzero entry positive.
void normalize_relation(std::vector<Integer>& coeffs);

/// A Q-basis of the integer relations among v (up to max_norm each), found
/// by repeated PSLQ with one pivot coordinate removed per round.
std::vector<std::vector<Integer>> relation_basis(std::span<const BigReal> v, Precision p, const Integer& max_norm);

/// True if `candidate` is a rational combination of the rows of `basis`.
bool in_rational_span(const std::vector<std::vector<Integer>>& basis, const std::vector<Integer>& candidate);

/// Best continued-fraction approximation with denominator <= max_den whose
/// error is below 2^(-p/2) (p = precision of x); nullopt if none.
std::optional<Rational> rationalize(const BigReal& x, const Integer& max_den);

struct Discovery {
  /// Column labels: "Li2(u^r)" per exponent, then "log^2(u)", "zeta(2)".
  std::vector<std::string> labels;
  std::vector<int> exponents;
  std::optional<RelationResult> relation;
  /// The relation packaged as a weight-2 ladder whose top Li2 coefficient
  /// is positive; re-verified at twice the search precision.
  std::optional<Ladder> ladder;
  BigReal exclusion_bound;
  /// False when a second, independent relation exists among the same
  /// columns; the found ladder is then one representative of many.
  bool unique = true;
  std::vector<Integer> alternate;
};

/// Searches for sum_r c_r Li2(u^r) + b log^2 u + d zeta(2) = 0 over the
/// given exponents, u the largest root of `base` in (0, 1).
Discovery discover(const RatPoly& base, std::vector<int> exponents, Precision p, const Integer& max_norm);
Discovery discover(const AlgebraicNumber& u, std::vector<int> exponents, Precision p, const Integer& max_norm);

/// The ladder's coefficients over (Li2(u^r) for r in exponents, log^2 u,
/// zeta(2)) as a primitive integer vector with the first nonzero entry
/// positive. Terms at exponents outside the list are an error.
std::vector<Integer> relation_vector(const Ladder& ladder, const std::vector<int>& exponents);

}  // namespace dilog
