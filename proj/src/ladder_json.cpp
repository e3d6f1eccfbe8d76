#include "dilog/ladder_json.hpp"

#include "dilog/errors.hpp"

namespace dilog {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::Parse, "ladder JSON at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& field(const Json& j, const std::string& where, const char* key) {
  if (!j.is_object()) fail(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(where + "/" + key, "missing");
  return *it;
}

Integer integer_from(const Json& j, const std::string& where) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = j.dump();
  } else {
    fail(where, "expected an integer string");
  }
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) fail(where, "not an integer: '" + text + "'");
  return out;
}

int small_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1'000'000'000LL || v > 1'000'000'000LL) fail(where, "integer out of range");
  return static_cast<int>(v);
}

Rational interval_end(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

}  // namespace

Json rational_to_json(const Rational& q) { return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

Rational rational_from_json(const Json& j, const std::string& where) {
  const Integer num = integer_from(field(j, where, "num"), where + "/num");
  const Integer den = integer_from(field(j, where, "den"), where + "/den");
  if (den == 0) fail(where + "/den", "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Json to_json(const AlgebraicNumber& a) {
  Json coeffs = Json::array();
  for (const auto& c : a.defpoly().coefficients()) coeffs.push_back(rational_to_json(c));
  return Json{{"coeffs", coeffs}, {"interval", Json::array({a.lo().get_str(), a.hi().get_str()})}};
}

Json to_json(const Ladder& ladder) {
  Json terms = Json::array();
  for (const auto& t : ladder.terms()) {
    terms.push_back(Json{{"r", t.exponent}, {"num", t.coeff.get_num().get_str()}, {"den", t.coeff.get_den().get_str()}});
  }
  Json zetas = Json::array();
  for (const auto& z : ladder.zeta_terms()) {
    zetas.push_back(Json{{"m", z.m}, {"num", z.coeff.get_num().get_str()}, {"den", z.coeff.get_den().get_str()}});
  }
  return Json{{"weight", ladder.weight()},
              {"index", ladder.index()},
              {"base", to_json(ladder.base())},
              {"terms", terms},
              {"log_coeff", rational_to_json(ladder.log_coeff())},
              {"zeta_terms", zetas},
              {"name", ladder.name()}};
}

Ladder ladder_from_json(const Json& j) {
  const int weight = small_int(field(j, "", "weight"), "/weight");
  if (weight < 2) fail("/weight", "must be >= 2");

  const Json& base = field(j, "", "base");
  const Json& coeffs = field(base, "/base", "coeffs");
  if (!coeffs.is_array() || coeffs.empty()) fail("/base/coeffs", "expected a non-empty array");
  std::vector<Rational> poly;
  for (std::size_t i = 0; i < coeffs.size(); ++i) poly.push_back(rational_from_json(coeffs[i], "/base/coeffs/" + std::to_string(i)));
  const Json& interval = field(base, "/base", "interval");
  if (!interval.is_array() || interval.size() != 2) fail("/base/interval", "expected [lo, hi]");
  const Rational lo = interval_end(interval[0], "/base/interval/0");
  const Rational hi = interval_end(interval[1], "/base/interval/1");
  std::optional<AlgebraicNumber> u;
  try {
    u.emplace(RatPoly(std::move(poly)), lo, hi);
  } catch (const Error& e) {
    fail("/base", e.what());
  }

  const Json& terms_json = field(j, "", "terms");
  if (!terms_json.is_array()) fail("/terms", "expected an array");
  std::vector<LadderTerm> terms;
  for (std::size_t i = 0; i < terms_json.size(); ++i) {
    const std::string where = "/terms/" + std::to_string(i);
    const int r = small_int(field(terms_json[i], where, "r"), where + "/r");
    if (r < 1) fail(where + "/r", "exponent must be >= 1");
    const Rational c = rational_from_json(terms_json[i], where);
    if (c == 0) fail(where + "/num", "zero coefficient");
    terms.push_back({r, c});
  }

  const Rational b = rational_from_json(field(j, "", "log_coeff"), "/log_coeff");

  std::vector<ZetaTerm> zetas;
  if (j.contains("zeta_terms")) {
    const Json& zj = j["zeta_terms"];
    if (!zj.is_array()) fail("/zeta_terms", "expected an array");
    for (std::size_t i = 0; i < zj.size(); ++i) {
      const std::string where = "/zeta_terms/" + std::to_string(i);
      const int m = small_int(field(zj[i], where, "m"), where + "/m");
      if (m < 2 || m > weight) fail(where + "/m", "must lie in [2, weight]");
      zetas.push_back({m, rational_from_json(zj[i], where)});
    }
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail("/name", "expected a string");
    name = j["name"].get<std::string>();
  }
  Ladder ladder(weight, std::move(*u), std::move(terms), b, std::move(zetas), std::move(name));
  if (j.contains("index") && small_int(j["index"], "/index") != ladder.index()) {
    fail("/index", "does not match the largest term exponent " + std::to_string(ladder.index()));
  }
  return ladder;
}

Json to_json(const CorpusEntry& entry) {
  Json out = to_json(entry.ladder);
  out["source"] = entry.source;
  if (!entry.note.empty()) out["note"] = entry.note;
  if (!entry.open_question.empty()) out["open_question"] = entry.open_question;
  out["default_digits"] = entry.default_digits;
  return out;
}

Json to_json(const CertReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    entries.push_back(Json{{"identity_name", e.identity_name},
                           {"statement", e.statement},
                           {"pass", e.pass},
                           {"witness_degrees", Json::array({e.lhs_degree, e.rhs_degree})}});
  }
  return Json{{"parity", to_string(report.parity)},
              {"n", report.n},
              {"modulus", report.modulus.to_string()},
              {"all_pass", report.all_pass()},
              {"entries", entries}};
}

Json to_json(const RelationResult& relation) {
  Json coeffs = Json::array();
  for (const auto& c : relation.coeffs) coeffs.push_back(c.get_str());
  return Json{{"coeffs", coeffs},
              {"residual_bound", relation.residual_bound.to_string(6)},
              {"residual", relation.residual.to_string(6)},
              {"iterations", relation.iterations},
              {"precision_used", relation.precision_used}};
}

}  // namespace dilog
