#include "dilog/corpus.hpp"

#include "dilog/errors.hpp"

#include <algorithm>
#include <cctype>

namespace dilog {

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

AlgebraicNumber root(RatPoly poly, Rational lo, Rational hi) { return AlgebraicNumber(std::move(poly), lo, hi); }

std::vector<LadderTerm> terms(std::initializer_list<std::pair<int, long>> list) {
  std::vector<LadderTerm> out;
  for (auto [r, c] : list) out.push_back({r, q(c)});
  return out;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> out;
  auto add = [&](Ladder ladder, std::string source, std::string note = {}, std::string open_question = {},
                 int digits = 60) {
    const std::string name = ladder.name();
    out.push_back({name, std::move(ladder), std::move(source), std::move(note), std::move(open_question), digits});
  };

  add(Ladder(2, root(RatPoly{-1, 2, 1}, q(41, 100), q(21, 50)), terms({{2, 1}, {1, -4}}), q(-1), {{2, q(3, 2)}},
             "euler-legendre"),
      "Euler and Legendre; u = sqrt(2) - 1. Li2(u^2) - 4 Li2(u) = log^2 u - 3 zeta(2)/2");

  add(Ladder(2, root(RatPoly{-1, 1, 1}, q(61, 100), q(31, 50)), terms({{6, 1}, {3, -4}, {2, -3}, {1, 6}}), q(0),
             {{2, q(-7, 5)}}, "coxeter"),
      "Coxeter (1935); u = 1/phi. Li2(u^6) - 4 Li2(u^3) - 3 Li2(u^2) + 6 Li2(u) = 7 zeta(2)/5");

  add(Ladder(2, root(RatPoly{-1, -1, 2, 1}, q(4, 5), q(81, 100)), terms({{2, 1}, {1, -1}}), q(1), {{2, q(1, 7)}},
             "watson"),
      "Watson (1937); u = 2 cos(pi/7) - 1 root of x^3 + 2x^2 - x - 1. "
      "Li2(u^2) - Li2(u) = -log^2 u - zeta(2)/7");

  add(Ladder(2, root(RatPoly{-1, 2, 2}, q(9, 25), q(37, 100)), terms({{3, 2}, {2, -3}, {1, -12}}), q(-3),
             {{2, q(5)}}, "loxton"),
      "Loxton (1984); u = (sqrt(3) - 1)/2. 2 Li2(u^3) - 3 Li2(u^2) - 12 Li2(u) = 3 log^2 u - 5 zeta(2)");

  add(theorem_even(5).renamed("motivating"),
      "Motivating ladder on x^10 + x^9 + ... + x^5 - x^4 - ... - 1 (even family, n = 5). "
      "2 Li2(u^6) - 2 Li2(u^5) - Li2(u) = 25 log^2 u - zeta(2)");

  add(Ladder(2, root(RatPoly{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}, q(17, 20), q(43, 50)),
             terms({{630, 1},
                    {315, -2},
                    {210, -3},
                    {126, -10},
                    {90, -7},
                    {35, 18},
                    {15, 84},
                    {14, 90},
                    {9, -4},
                    {8, 339},
                    {7, 45},
                    {6, 265},
                    {5, -273},
                    {4, -678},
                    {3, -1016},
                    {2, -744},
                    {1, -804}}),
             q(-22050), {{2, q(2003)}}, "bailey-broadhurst"),
      "Bailey and Broadhurst; u the root in (0, 1) of Lehmer's polynomial. Index 630, 17 Li2 terms",
      "the root in (0, 1) is the one near 0.8501; its interval is frozen here", {}, 120);

  add(Ladder(2, root(RatPoly{-1, 1, 1, -1, 0, 1}, q(69, 100), q(7, 10)),
             terms({{9, 2}, {8, 1}, {6, -2}, {4, -2}, {3, -2}, {1, -4}}), q(-13), {{2, q(4)}}, "al-index9-quintic"),
      "Abouzahra and Lewin; index 9 on x^5 - x^3 + x^2 + x - 1");

  add(Ladder(2, root(RatPoly{-1, 1, 1, 1, 1, 1}, q(1, 2), q(51, 100)), terms({{5, 2}, {4, -1}, {1, -2}}), q(-1),
             {{2, q(1)}}, "al-w-quintic"),
      "Abouzahra and Lewin; w root of w^5 + w^4 + w^3 + w^2 + w - 1. 2 Li2(w^5) - Li2(w^4) - 2 Li2(w) = "
      "log^2 w - zeta(2)",
      {},
      "This relation is described as the n = 2 case of the odd family, but that case is a different ladder: "
      "base x^5 + x^4 + x^3 + x^2 - x - 1 with terms 2 Li2(u^4) - 3 Li2(u^2) (corpus entry theorem-odd-2). "
      "Both are verified independently; the discrepancy is recorded, not resolved.");

  add(Ladder(2, root(RatPoly{-1, 1, 0, 0, 1}, q(18, 25), q(73, 100)),
             terms({{21, 2}, {7, -6}, {6, -14}, {2, 21}, {1, 5}}), q(31), {{2, q(-11)}}, "al-index21"),
      "Abouzahra and Lewin; index 21 on x^4 + x - 1");

  add(Ladder(2, root(RatPoly{1, -2, 0, -2, 1}, q(43, 100), q(11, 25)), terms({{4, 3}, {3, -4}, {2, -6}, {1, -12}}),
             q(-6), {{2, q(7)}}, "kummer-rogers-quartic"),
      "Kummer and Rogers; quartic base x^4 - 2x^3 - 2x + 1");

  add(theorem_odd(2), "Odd family at n = 2; exponents 4 and 2 merge to 2 Li2(u^4) - 3 Li2(u^2)", {},
      "Compare al-w-quintic, which is attributed to this case in the source text.");
  return out;
}

std::string normalize(std::string_view name) {
  std::string out;
  for (char c : name) out.push_back(c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = build();
  return entries;
}

const CorpusEntry& corpus_entry(std::string_view name) {
  const std::string key = normalize(name);
  for (const auto& e : corpus()) {
    if (e.name == key) return e;
  }
  throw Error(ErrorCode::UnknownName, "unknown corpus ladder '" + std::string(name) + "'");
}

}  // namespace dilog
