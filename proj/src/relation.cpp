#include "dilog/relation.hpp"

#include "dilog/numerics.hpp"

#include <algorithm>
#include <numeric>

namespace dilog {

namespace {

using IntMatrix = std::vector<std::vector<Integer>>;
using RealMatrix = std::vector<std::vector<BigReal>>;

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BigReal euclidean_norm(std::span<const BigReal> v, Precision p) {
  BigReal acc(p);
  for (const auto& x : v) acc += square(x);
  return sqrt(acc);
}

BigReal int_norm(const std::vector<Integer>& a, Precision p) {
  BigReal acc(p);
  for (const auto& c : a) acc += BigReal(Integer(c * c), p);
  return sqrt(acc);
}

BigReal dot(const std::vector<Integer>& a, std::span<const BigReal> v, Precision p) {
  BigReal acc(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) acc += v[i] * a[i];
  }
  return acc;
}

// Relation acceptance: |a . v| < 2^(-p/2) ||v||, evaluated with the inputs'
// own precision plus guard bits.
std::optional<RelationResult> accept(std::vector<Integer> a, std::span<const BigReal> v, Precision p,
                                     long iterations) {
  normalize_relation(a);
  const Precision wp = p + 32;
  const BigReal res = abs(dot(a, v, wp));
  const BigReal bound = euclidean_norm(v, wp) * BigReal::pow2(-(p.bits / 2), wp);
  if (!(res < bound)) return std::nullopt;
  return RelationResult{std::move(a), bound.rounded(Precision(64)), res.rounded(Precision(64)), iterations, p.bits};
}

}  // namespace

void normalize_relation(std::vector<Integer>& coeffs) {
  Integer g(0);
  for (const auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return;
  const auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c != 0; });
  if (*first < 0) g = -g;
  for (auto& c : coeffs) c /= g;
}

PslqOutcome pslq(std::span<const BigReal> x, Precision p, const Integer& max_norm, PslqOptions options) {
  const std::size_t n = x.size();
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "pslq needs at least two values");
  for (const auto& xi : x) {
    if (xi.is_zero() || !xi.is_finite()) throw Error(ErrorCode::InvalidArgument, "pslq inputs must be finite and nonzero");
  }
  const Precision wp = p;
  const Precision low(64);
  const BigReal tolerance = BigReal::pow2(-static_cast<long>(p.bits * 4 / 5), wp);
  const BigReal a_limit = BigReal::pow2(static_cast<long>(p.bits * 9 / 10), low);
  const BigReal max_norm_r(max_norm, low);
  const BigReal gamma = sqrt(BigReal(Rational(4, 3), low));

  // Normalized input and partial norms s_k = ||y_k..y_(n-1)||.
  std::vector<BigReal> y;
  y.reserve(n);
  for (const auto& xi : x) y.push_back(xi.rounded(wp));
  const BigReal scale = euclidean_norm(y, wp);
  for (auto& yi : y) yi /= scale;
  std::vector<BigReal> s(n, BigReal(wp));
  {
    BigReal acc(wp);
    for (std::size_t k = n; k-- > 0;) {
      acc += square(y[k]);
      s[k] = sqrt(acc);
    }
  }

  RealMatrix H(n, std::vector<BigReal>(n - 1, BigReal(wp)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n - 1 && j <= i; ++j) {
      if (i == j) {
        H[i][j] = s[j + 1] / s[j];
      } else {
        H[i][j] = -(y[i] * y[j]) / (s[j] * s[j + 1]);
      }
    }
  }
  IntMatrix A = identity(n);
  IntMatrix B = identity(n);

  BigReal tmp(wp);
  Integer t;
  auto reduce = [&](std::size_t i, std::size_t j) {
    if (H[j][j].is_zero()) return;
    mpfr_div(tmp.raw(), H[i][j].raw(), H[j][j].raw(), MPFR_RNDN);
    mpfr_round(tmp.raw(), tmp.raw());
    if (tmp.is_zero()) return;
    mpfr_get_z(t.get_mpz_t(), tmp.raw(), MPFR_RNDN);
    // y_j += t y_i
    mpfr_mul_z(tmp.raw(), y[i].raw(), t.get_mpz_t(), MPFR_RNDN);
    mpfr_add(y[j].raw(), y[j].raw(), tmp.raw(), MPFR_RNDN);
    for (std::size_t k = 0; k <= j; ++k) {
      mpfr_mul_z(tmp.raw(), H[j][k].raw(), t.get_mpz_t(), MPFR_RNDN);
      mpfr_sub(H[i][k].raw(), H[i][k].raw(), tmp.raw(), MPFR_RNDN);
    }
    for (std::size_t k = 0; k < n; ++k) {
      A[i][k] -= t * A[j][k];
      B[k][j] += t * B[k][i];
    }
  };

  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i; j-- > 0;) reduce(i, j);
  }

  std::vector<BigReal> gamma_pow;
  gamma_pow.emplace_back(1, low);
  for (std::size_t i = 1; i < n; ++i) gamma_pow.push_back(gamma_pow.back() * gamma);

  PslqOutcome outcome{std::nullopt, BigReal(0, low), 0};
  BigReal weighted(low);
  BigReal best(low);
  for (long iter = 1; iter <= options.max_iterations; ++iter) {
    outcome.iterations = iter;
    // Exchange step at the row maximizing gamma^(m+1) |H_mm|.
    std::size_t m = 0;
    for (std::size_t i = 0; i < n - 1; ++i) {
      mpfr_mul(weighted.raw(), gamma_pow[i + 1].raw(), H[i][i].raw(), MPFR_RNDN);
      mpfr_abs(weighted.raw(), weighted.raw(), MPFR_RNDN);
      if (i == 0 || weighted > best) {
        best = weighted;
        m = i;
      }
    }
    std::swap(y[m], y[m + 1]);
    std::swap(H[m], H[m + 1]);
    std::swap(A[m], A[m + 1]);
    for (std::size_t k = 0; k < n; ++k) std::swap(B[k][m], B[k][m + 1]);

    if (m + 2 < n) {
      // Corner step: restore lower-trapezoidal shape with a Givens rotation.
      const BigReal t0 = sqrt(square(H[m][m]) + square(H[m][m + 1]));
      const BigReal t1 = H[m][m] / t0;
      const BigReal t2 = H[m][m + 1] / t0;
      for (std::size_t i = m; i < n; ++i) {
        const BigReal t3 = H[i][m];
        const BigReal t4 = H[i][m + 1];
        H[i][m] = t1 * t3 + t2 * t4;
        H[i][m + 1] = t1 * t4 - t2 * t3;
      }
    }
    for (std::size_t i = m + 1; i < n; ++i) {
      for (std::size_t j = std::min(i - 1, m + 1) + 1; j-- > 0;) reduce(i, j);
    }

    // Termination: a tiny y_j means column j of B is a relation.
    for (std::size_t j = 0; j < n; ++j) {
      if (abs(y[j]) >= tolerance) continue;
      std::vector<Integer> candidate(n);
      for (std::size_t k = 0; k < n; ++k) candidate[k] = B[k][j];
      if (int_norm(candidate, low) > max_norm_r) continue;
      if (auto rel = accept(std::move(candidate), x, p, iter)) {
        outcome.relation = std::move(rel);
        return outcome;
      }
    }
    for (std::size_t j = 0; j < n - 1; ++j) {
      if (H[j][j].is_zero()) {
        std::vector<Integer> candidate(n);
        for (std::size_t k = 0; k < n; ++k) candidate[k] = B[k][j];
        if (auto rel = accept(std::move(candidate), x, p, iter)) {
          outcome.relation = std::move(rel);
          return outcome;
        }
      }
    }

    // Any relation has norm >= 1 / max |H_jj|.
    BigReal largest(0, low);
    for (std::size_t j = 0; j < n - 1; ++j) largest = max(largest, abs(H[j][j]).rounded(low));
    if (!largest.is_zero()) {
      outcome.exclusion_bound = BigReal(1, low) / largest;
      if (outcome.exclusion_bound > max_norm_r) return outcome;
    }

    Integer a_max(0);
    for (const auto& row : A) {
      for (const auto& c : row) {
        if (abs(c) > a_max) a_max = abs(c);
      }
    }
    if (BigReal(a_max, low) > a_limit) {
      throw Error(ErrorCode::PrecisionExhausted,
                  "pslq: multiplier entries outgrew " + std::to_string(p.bits) +
                      "-bit precision after " + std::to_string(iter) + " iterations (no relation with norm < " +
                      outcome.exclusion_bound.to_string(6) + ")");
    }
  }
  throw Error(ErrorCode::PrecisionExhausted,
              "pslq: iteration limit " + std::to_string(options.max_iterations) + " reached");
}

std::vector<std::vector<Integer>> relation_basis(std::span<const BigReal> v, Precision p, const Integer& max_norm) {
  std::vector<std::vector<Integer>> basis;
  std::vector<std::size_t> active(v.size());
  std::iota(active.begin(), active.end(), std::size_t{0});
  while (active.size() >= 2) {
    std::vector<BigReal> sub;
    for (std::size_t i : active) sub.push_back(v[i]);
    const auto outcome = pslq(sub, p, max_norm);
    if (!outcome.relation) break;
    std::vector<Integer> full(v.size(), Integer(0));
    std::size_t pivot = active.size();
    for (std::size_t k = 0; k < active.size(); ++k) {
      full[active[k]] = outcome.relation->coeffs[k];
      if (pivot == active.size() && full[active[k]] != 0) pivot = k;
    }
    basis.push_back(std::move(full));
    // Later relations vanish at this pivot, so the basis stays triangular.
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pivot));
  }
  return basis;
}

namespace {

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool in_rational_span(const std::vector<std::vector<Integer>>& basis, const std::vector<Integer>& candidate) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& b : basis) rows.emplace_back(b.begin(), b.end());
  const std::size_t before = rational_rank(rows);
  rows.emplace_back(candidate.begin(), candidate.end());
  return rational_rank(std::move(rows)) == before;
}

std::optional<Rational> rationalize(const BigReal& x, const Integer& max_den) {
  if (!x.is_finite()) return std::nullopt;
  const Precision p = x.precision();
  const Precision wp = p + 32;
  const BigReal tolerance = BigReal::pow2(-(p.bits / 2), wp) * max(abs(x), BigReal(1, wp));
  Integer h_prev(1), h(floor_to_integer(x));
  Integer k_prev(0), k(1);
  BigReal r = x.rounded(wp);
  BigReal frac = r - BigReal(h, wp);
  while (true) {
    const Rational approx(h, k);
    if (abs(x - BigReal(approx, wp)) < tolerance) return Rational(approx);
    if (frac.is_zero()) return std::nullopt;
    r = BigReal(1, wp) / frac;
    const Integer a = floor_to_integer(r);
    frac = r - BigReal(a, wp);
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_den) return std::nullopt;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
}

std::vector<Integer> relation_vector(const Ladder& ladder, const std::vector<int>& exponents) {
  std::vector<Rational> coeffs;
  for (int r : exponents) coeffs.push_back(ladder.coeff(r));
  for (const auto& t : ladder.terms()) {
    if (std::find(exponents.begin(), exponents.end(), t.exponent) == exponents.end()) {
      throw Error(ErrorCode::InvalidArgument, "ladder term u^" + std::to_string(t.exponent) + " not in exponent list");
    }
  }
  coeffs.push_back(ladder.log_coeff());
  coeffs.push_back(ladder.zeta_coeff(2));
  Integer den(1);
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  for (const auto& c : coeffs) out.push_back(Integer(c.get_num() * (den / c.get_den())));
  normalize_relation(out);
  return out;
}

Discovery discover(const RatPoly& base, std::vector<int> exponents, Precision p, const Integer& max_norm) {
  auto roots = isolate_real_roots(base, Rational(0), Rational(1));
  if (roots.empty()) throw Error(ErrorCode::NoPositiveRoot, "base " + base.to_string() + " has no root in (0, 1)");
  return discover(roots.back(), std::move(exponents), p, max_norm);
}

Discovery discover(const AlgebraicNumber& u, std::vector<int> exponents, Precision p, const Integer& max_norm) {
  std::sort(exponents.begin(), exponents.end());
  exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
  if (exponents.empty() || exponents.front() < 1) {
    throw Error(ErrorCode::InvalidExponents, "exponents must be a non-empty list of positive integers");
  }
  Discovery out{{}, exponents, std::nullopt, std::nullopt, BigReal(Precision(64)), true, {}};
  const Precision wp = p + 32;
  const BigReal x = u.value(wp);
  std::vector<BigReal> v;
  for (int r : exponents) {
    v.push_back(li2_real(pow(x, static_cast<unsigned long>(r)), p));
    out.labels.push_back("Li2(u^" + std::to_string(r) + ")");
  }
  v.push_back(square(log(x)).rounded(p));
  out.labels.emplace_back("log^2(u)");
  v.push_back(const_zeta2(p));
  out.labels.emplace_back("zeta(2)");

  const auto outcome = pslq(v, p, max_norm);
  out.exclusion_bound = outcome.exclusion_bound;
  if (!outcome.relation) return out;
  const auto& a = outcome.relation->coeffs;
  const std::size_t k = exponents.size();

  std::vector<LadderTerm> terms;
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] != 0) terms.push_back({exponents[i], Rational(a[i])});
  }
  if (terms.empty()) {
    // Only log^2 u and zeta(2) are involved: not a ladder. Report as found
    // nothing rather than a degenerate relation.
    out.relation = outcome.relation;
    return out;
  }
  const int sign = terms.back().coeff > 0 ? 1 : -1;
  for (auto& t : terms) t.coeff *= sign;
  Ladder ladder(2, u, std::move(terms), Rational(a[k] * sign), {{2, Rational(a[k + 1] * sign)}},
                "discovered");

  // The relation must survive at twice the precision, well below the
  // noise floor of the search.
  const Precision check = Precision(p.bits * 2);
  const BigReal res = abs(residual(ladder, check));
  BigReal mass(0, check);
  for (const auto& c : a) mass += BigReal(Integer(abs(c)), check);
  const BigReal threshold = BigReal::pow2(-(p.bits * 3 / 2), check) * (mass + 1);
  if (!(res < threshold)) {
    throw Error(ErrorCode::PrecisionExhausted,
                "candidate relation failed re-verification at " + std::to_string(check.bits) +
                    " bits (residual " + res.to_string(6) + "); raise the precision");
  }
  out.relation = outcome.relation;
  out.ladder = std::move(ladder);

  // Uniqueness: drop one Li2 column used by the relation and search again.
  std::size_t pivot = 0;
  while (a[pivot] == 0) ++pivot;
  std::vector<BigReal> rest;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != pivot) rest.push_back(v[i]);
  }
  if (rest.size() >= 2) {
    try {
      const auto second = pslq(rest, p, max_norm);
      if (second.relation) {
        out.unique = false;
        out.alternate.assign(v.size(), Integer(0));
        for (std::size_t i = 0, j = 0; i < v.size(); ++i) {
          if (i != pivot) out.alternate[i] = second.relation->coeffs[j++];
        }
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PrecisionExhausted) throw;
    }
  }
  return out;
}

}  // namespace dilog
