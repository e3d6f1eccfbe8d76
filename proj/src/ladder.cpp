#include "dilog/ladder.hpp"

#include "dilog/errors.hpp"
#include "dilog/numerics.hpp"
#include "dilog/relation.hpp"

#include <algorithm>
#include <map>

namespace dilog {

namespace {

long bit_length(const Integer& z) { return z == 0 ? 0 : static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

// Rough log2 of the total coefficient mass, used to size guard bits.
long coefficient_bits(const Ladder& ladder) {
  Rational total = abs(ladder.log_coeff());
  for (const auto& t : ladder.terms()) total += abs(t.coeff);
  for (const auto& z : ladder.zeta_terms()) total += abs(z.coeff);
  return bit_length(total.get_num()) - bit_length(total.get_den()) + 1;
}

}  // namespace

Ladder::Ladder(int weight, AlgebraicNumber base, std::vector<LadderTerm> terms, Rational log_coeff,
               std::vector<ZetaTerm> zeta_terms, std::string name)
    : weight_(weight), base_(std::move(base)), log_coeff_(std::move(log_coeff)), name_(std::move(name)) {
  if (weight_ < 2) throw Error(ErrorCode::InvalidArgument, "ladder weight must be >= 2");
  if (base_.lo() < 0 || base_.hi() > 1 || (base_.is_rational() && (base_.lo() == 0 || base_.lo() == 1))) {
    throw Error(ErrorCode::InvalidArgument, "ladder base must lie strictly inside (0, 1)");
  }
  std::map<int, Rational, std::greater<>> merged;
  for (auto& t : terms) {
    if (t.exponent < 1) throw Error(ErrorCode::InvalidArgument, "ladder exponents must be >= 1");
    merged[t.exponent] += t.coeff;
  }
  for (auto& [r, c] : merged) {
    if (c != 0) terms_.push_back({r, c});
  }
  std::map<int, Rational> zetas;
  for (auto& z : zeta_terms) {
    if (z.m < 2 || z.m > weight_) throw Error(ErrorCode::InvalidArgument, "zeta index must lie in [2, weight]");
    zetas[z.m] += z.coeff;
  }
  for (auto& [m, c] : zetas) {
    if (c != 0) zeta_terms_.push_back({m, c});
  }
}

int Ladder::index() const { return terms_.empty() ? 0 : terms_.front().exponent; }

Rational Ladder::coeff(int exponent) const {
  for (const auto& t : terms_) {
    if (t.exponent == exponent) return t.coeff;
  }
  return Rational(0);
}

Rational Ladder::zeta_coeff(int m) const {
  for (const auto& z : zeta_terms_) {
    if (z.m == m) return z.coeff;
  }
  return Rational(0);
}

Ladder Ladder::renamed(std::string name) const {
  Ladder out = *this;
  out.name_ = std::move(name);
  return out;
}

BigReal residual(const Ladder& ladder, Precision p) {
  const long extra = kGuardBits + std::max(0L, coefficient_bits(ladder)) +
                     bit_length(Integer(std::max(1, ladder.index()))) + 8;
  const Precision wp = p + extra;
  const BigReal u = ladder.base().value(wp);
  const BigReal log_u = log(u);
  const int n = ladder.weight();
  BigReal sum(wp);
  for (const auto& t : ladder.terms()) {
    const BigReal x = pow(u, static_cast<unsigned long>(t.exponent));
    const BigReal li = n == 2 ? li2_real(x, wp) : li_n(n, x, wp);
    sum += li * t.coeff;
  }
  sum += pow(log_u, static_cast<unsigned long>(n)) * ladder.log_coeff();
  for (const auto& z : ladder.zeta_terms()) {
    const BigReal zeta = z.m == 2 ? const_zeta2(wp) : zeta_int(static_cast<unsigned long>(z.m), wp);
    sum += zeta * pow(log_u, static_cast<unsigned long>(n - z.m)) * z.coeff;
  }
  return sum.rounded(p);
}

Ladder theorem_even(int n) {
  const AlgebraicNumber u = isolate_positive_root(base_even(n));
  const long nn = static_cast<long>(n) * n;
  return Ladder(2, u, {{n + 1, Rational(2)}, {n, Rational(-2)}, {1, Rational(-1)}}, Rational(-nn),
                {{2, Rational(1)}}, "theorem-even-" + std::to_string(n));
}

Ladder theorem_odd(int n) {
  const AlgebraicNumber u = isolate_positive_root(base_odd(n));
  const long nn = static_cast<long>(n) * n;
  return Ladder(2, u, {{n + 2, Rational(2)}, {n, Rational(-2)}, {2, Rational(-1)}}, Rational(-nn),
                {{2, Rational(1)}}, "theorem-odd-" + std::to_string(n));
}

Ladder theorem_ladder(Parity parity, int n) { return parity == Parity::Even ? theorem_even(n) : theorem_odd(n); }

Ladder abel_four_term(int n, int p, int q) {
  if (p < 1 || q < 1 || p + q >= n) {
    throw Error(ErrorCode::InvalidExponents, "abel_four_term needs p, q >= 1 and p + q < n (got n=" +
                                                 std::to_string(n) + ", p=" + std::to_string(p) +
                                                 ", q=" + std::to_string(q) + ")");
  }
  // x^n + 1 - x^p - x^q always vanishes at x = 1; the ladder lives on the cofactor.
  RatPoly full = RatPoly::monomial(Rational(1), n) + RatPoly::constant(Rational(1)) -
                 RatPoly::monomial(Rational(1), p) - RatPoly::monomial(Rational(1), q);
  const RatPoly cofactor = divmod(full, RatPoly{-1, 1}).first;
  auto roots = isolate_real_roots(cofactor, Rational(0), Rational(1));
  if (roots.empty()) {
    throw Error(ErrorCode::NoInteriorRoot, "x^" + std::to_string(n) + " + 1 - x^" + std::to_string(p) + " - x^" +
                                               std::to_string(q) + " has no root strictly inside (0, 1)");
  }
  const long pq = static_cast<long>(p) * q;
  return Ladder(2, roots.back(),
                {{n - p - q, Rational(1)}, {n - p, Rational(-1)}, {n - q, Rational(-1)}, {p, Rational(1)},
                 {q, Rational(1)}},
                Rational(pq), {{2, Rational(-1)}},
                "abel-" + std::to_string(n) + "-" + std::to_string(p) + "-" + std::to_string(q));
}

Classification classify(const Ladder& ladder) {
  Classification out;
  const int top = ladder.index();
  out.restricted = top > 0;
  for (const auto& t : ladder.terms()) {
    if (t.exponent != top && top % t.exponent != 0) out.restricted = false;
  }
  for (const auto& z : ladder.zeta_terms()) {
    if (z.m != 2) out.restricted = false;
  }
  // Coefficients are stored as exact rationals, so a stored ladder is valid
  // by construction; discovered ladders pass through rationalize() first.
  out.valid = true;
  for (const auto& z : ladder.zeta_terms()) {
    if (z.coeff.get_den() == 0) out.valid = false;
  }
  return out;
}

std::optional<Rational> recover_zeta2_coeff(const Ladder& ladder, Precision p, const Integer& max_den) {
  const Precision wp = p + 32;
  const BigReal u = ladder.base().value(wp + 32);
  BigReal sum(wp);
  for (const auto& t : ladder.terms()) sum += li2_real(pow(u, static_cast<unsigned long>(t.exponent)), wp) * t.coeff;
  sum += square(log(u)) * ladder.log_coeff();
  return rationalize((-sum / const_zeta2(wp)).rounded(p), max_den);
}

}  // namespace dilog
