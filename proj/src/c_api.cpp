#include "dilog/dilog.h"

#include "dilog/corpus.hpp"
#include "dilog/errors.hpp"
#include "dilog/ladder_json.hpp"
#include "dilog/relation.hpp"
#include "dilog/special.hpp"

#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <string>

using namespace dilog;

struct dilog_ladder {
  Ladder ladder;
  std::string source;
  std::string note;
  std::string open_question;
  std::optional<std::pair<Parity, int>> family;
};

struct dilog_report {
  bool passed = false;
  std::string json;
};

namespace {

constexpr int kMinDigits = 20;
constexpr int kMaxDigits = 200000;
constexpr int kResidualDigits = 6;

thread_local std::string last_error;

dilog_status set_error(dilog_status status, const std::string& message) {
  last_error = message;
  return status;
}

dilog_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidExponents:
      return DILOG_INVALID_ARGUMENT;
    case ErrorCode::NoPositiveRoot:
    case ErrorCode::NoInteriorRoot:
      return DILOG_NO_POSITIVE_ROOT;
    case ErrorCode::PrecisionExhausted:
      return DILOG_PRECISION_EXHAUSTED;
    case ErrorCode::UnknownName:
      return DILOG_UNKNOWN_NAME;
    case ErrorCode::Parse:
      return DILOG_PARSE_ERROR;
  }
  return DILOG_INTERNAL_ERROR;
}

// Runs `body`, translating exceptions into status codes at the boundary.
template <typename F>
dilog_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& e) {
    return set_error(map_code(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(DILOG_PARSE_ERROR, e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(DILOG_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return set_error(DILOG_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(DILOG_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return set_error(DILOG_INTERNAL_ERROR, e.what());
  }
}

void require_out(const void* out) {
  if (out == nullptr) throw Error(ErrorCode::InvalidArgument, "output pointer is null");
}

Precision digits_precision(int digits) {
  if (digits < kMinDigits || digits > kMaxDigits) {
    throw Error(ErrorCode::InvalidArgument, "digits must lie in [" + std::to_string(kMinDigits) + ", " +
                                                std::to_string(kMaxDigits) + "], got " + std::to_string(digits));
  }
  return precision_for_digits(digits);
}

// 10^(10 - digits): ten digits of slack below the requested precision.
BigReal pass_threshold(int digits) {
  BigReal t(10, Precision(64));
  mpfr_pow_si(t.raw(), t.raw(), 10L - digits, MPFR_RNDN);
  return t;
}

std::string threshold_text(int digits) { return "1e" + std::to_string(10 - digits); }

std::string sci(const BigReal& x) { return x.to_string(kResidualDigits); }

dilog_status emit(bool passed, const Json& body, dilog_report** out, dilog_status failed = DILOG_CHECK_FAILED) {
  *out = new dilog_report{passed, body.dump(2)};
  return passed ? DILOG_OK : failed;
}

char* copy_string(const std::string& s) {
  char* buffer = static_cast<char*>(std::malloc(s.size() + 1));
  if (buffer == nullptr) throw std::bad_alloc();
  std::memcpy(buffer, s.c_str(), s.size() + 1);
  return buffer;
}

Parity parity_of(dilog_parity p) {
  if (p != DILOG_EVEN && p != DILOG_ODD) throw Error(ErrorCode::InvalidArgument, "parity must be even or odd");
  return p == DILOG_EVEN ? Parity::Even : Parity::Odd;
}

void require_n(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1, got " + std::to_string(n));
}

Json root_json(const AlgebraicNumber& root, const RatPoly& poly, int digits) {
  const Precision p = digits_precision(digits);
  const BigReal value = root.value(p);
  Json out{{"command", "root"}, {"polynomial", poly.to_string()}, {"digits", digits}};
  out["value"] = value.to_string(digits, Notation::Fixed);
  out["in_unit_interval"] = root.hi() <= 1 && !(root.is_rational() && root.lo() == 1);
  out["root"] = to_json(root);
  out["root"]["value"] = out["value"];
  out["interval"] = Json::array({root.lo().get_str(), root.hi().get_str()});
  return out;
}

dilog_status root_report(const RatPoly& poly, int digits, int require_unit, dilog_report** out) {
  require_out(out);
  const AlgebraicNumber root = isolate_positive_root(poly);
  if (require_unit && !(root.hi() <= 1 && root.lo() < 1)) {
    return set_error(DILOG_NO_POSITIVE_ROOT, "no root of " + poly.to_string() + " lies in (0, 1); smallest positive root is in [" +
                                                 root.lo().get_str() + ", " + root.hi().get_str() + "]");
  }
  return emit(true, root_json(root, poly, digits), out);
}

Json rogers_json(Parity parity, int n, Precision p, const BigReal& threshold) {
  Json checks = Json::array();
  for (const auto& c : rogers_form_checks(parity, n, p)) {
    checks.push_back(Json{{"label", c.label},
                          {"statement", c.statement},
                          {"residual", sci(c.residual)},
                          {"pass", abs(c.residual) < threshold}});
  }
  return checks;
}

}  // namespace

extern "C" {

const char* dilog_version(void) { return "0.1.0"; }

const char* dilog_last_error(void) { return last_error.c_str(); }

const char* dilog_status_string(dilog_status status) {
  switch (status) {
    case DILOG_OK: return "ok";
    case DILOG_CHECK_FAILED: return "check failed";
    case DILOG_INVALID_ARGUMENT: return "invalid argument";
    case DILOG_NO_POSITIVE_ROOT: return "no positive root";
    case DILOG_NOT_FOUND: return "not found";
    case DILOG_PRECISION_EXHAUSTED: return "precision exhausted";
    case DILOG_UNKNOWN_NAME: return "unknown name";
    case DILOG_PARSE_ERROR: return "parse error";
    case DILOG_IO_ERROR: return "i/o error";
    case DILOG_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

dilog_status dilog_ladder_from_corpus(const char* name, dilog_ladder** out) {
  return guarded([&] {
    require_out(out);
    if (name == nullptr) throw Error(ErrorCode::InvalidArgument, "name is null");
    const CorpusEntry& e = corpus_entry(name);
    *out = new dilog_ladder{e.ladder, e.source, e.note, e.open_question, std::nullopt};
    return DILOG_OK;
  });
}

dilog_status dilog_ladder_from_family(dilog_parity parity, int n, dilog_ladder** out) {
  return guarded([&] {
    require_out(out);
    require_n(n);
    const Parity par = parity_of(parity);
    *out = new dilog_ladder{theorem_ladder(par, n), {}, {}, {}, std::pair{par, n}};
    return DILOG_OK;
  });
}

dilog_status dilog_ladder_from_json(const char* json, dilog_ladder** out) {
  return guarded([&] {
    require_out(out);
    if (json == nullptr) throw Error(ErrorCode::InvalidArgument, "json is null");
    const Json j = Json::parse(json);
    *out = new dilog_ladder{ladder_from_json(j), {}, {}, {}, std::nullopt};
    if (j.contains("source") && j["source"].is_string()) (*out)->source = j["source"].get<std::string>();
    if (j.contains("note") && j["note"].is_string()) (*out)->note = j["note"].get<std::string>();
    if (j.contains("open_question") && j["open_question"].is_string()) {
      (*out)->open_question = j["open_question"].get<std::string>();
    }
    return DILOG_OK;
  });
}

dilog_status dilog_ladder_to_json(const dilog_ladder* ladder, char** out) {
  return guarded([&] {
    require_out(out);
    if (ladder == nullptr) throw Error(ErrorCode::InvalidArgument, "ladder is null");
    *out = copy_string(to_json(ladder->ladder).dump(2));
    return DILOG_OK;
  });
}

void dilog_ladder_free(dilog_ladder* ladder) { delete ladder; }

void dilog_string_free(char* text) { std::free(text); }

dilog_status dilog_verify_ladder(const dilog_ladder* ladder, int digits, dilog_report** out) {
  return guarded([&] {
    require_out(out);
    if (ladder == nullptr) throw Error(ErrorCode::InvalidArgument, "ladder is null");
    const Precision p = digits_precision(digits);
    const BigReal res = residual(ladder->ladder, p);
    const BigReal threshold = pass_threshold(digits);
    const bool passed = abs(res) < threshold;
    const Classification cls = classify(ladder->ladder);
    Json body{{"command", "verify"},
              {"name", ladder->ladder.name()},
              {"digits", digits},
              {"precision_bits", p.bits},
              {"residual", sci(res)},
              {"threshold", threshold_text(digits)},
              {"pass", passed},
              {"classification", Json{{"restricted", cls.restricted}, {"valid", cls.valid}}},
              {"ladder", to_json(ladder->ladder)}};
    Json meta = Json::object();
    if (!ladder->source.empty()) meta["source"] = ladder->source;
    if (!ladder->note.empty()) meta["note"] = ladder->note;
    if (!ladder->open_question.empty()) meta["open_question"] = ladder->open_question;
    if (ladder->family) {
      meta["family"] = Json{{"parity", to_string(ladder->family->first)}, {"n", ladder->family->second}};
      meta["rogers_form"] = rogers_json(ladder->family->first, ladder->family->second, p, threshold);
    }
    body["metadata"] = meta;
    return emit(passed, body, out);
  });
}

dilog_status dilog_root(const char* poly_csv, int digits, int require_unit_interval, dilog_report** out) {
  return guarded([&] {
    if (poly_csv == nullptr) throw Error(ErrorCode::InvalidArgument, "polynomial is null");
    digits_precision(digits);
    return root_report(RatPoly::parse(poly_csv), digits, require_unit_interval, out);
  });
}

dilog_status dilog_root_family(dilog_parity parity, int n, int digits, int require_unit_interval, dilog_report** out) {
  return guarded([&] {
    require_n(n);
    digits_precision(digits);
    return root_report(family_base(parity_of(parity), n), digits, require_unit_interval, out);
  });
}

dilog_status dilog_verify_exact(dilog_parity parity, int n, dilog_report** out) {
  return guarded([&] {
    require_out(out);
    require_n(n);
    const Parity par = parity_of(parity);
    const CertReport step = verify_step_identities(n, par);
    const CertReport cyclo = verify_cyclotomic(n, par);
    const bool passed = step.all_pass() && cyclo.all_pass();
    const Json body{{"command", "verify-exact"},
                    {"parity", to_string(par)},
                    {"n", n},
                    {"modulus", step.modulus.to_string()},
                    {"pass", passed},
                    {"step_identities", to_json(step)},
                    {"cyclotomic", to_json(cyclo)}};
    return emit(passed, body, out);
  });
}

dilog_status dilog_discover(const char* poly_csv, const int* exponents, size_t count, int digits,
                            const char* max_norm, dilog_report** out) {
  return guarded([&] {
    require_out(out);
    if (poly_csv == nullptr || max_norm == nullptr) throw Error(ErrorCode::InvalidArgument, "null argument");
    if (exponents == nullptr || count == 0) throw Error(ErrorCode::InvalidArgument, "exponent list is empty");
    const Precision p = digits_precision(digits);
    Integer bound;
    if (bound.set_str(max_norm, 10) != 0 || bound < 1) {
      throw Error(ErrorCode::InvalidArgument, std::string("max-norm must be a positive integer, got '") + max_norm + "'");
    }
    const RatPoly base = RatPoly::parse(poly_csv);
    const Discovery d = discover(base, std::vector<int>(exponents, exponents + count), p, bound);
    Json body{{"command", "discover"},
              {"polynomial", base.to_string()},
              {"exponents", d.exponents},
              {"digits", digits},
              {"max_norm", bound.get_str()},
              {"labels", d.labels},
              {"found", d.ladder.has_value()}};
    if (d.relation) body["relation"] = to_json(*d.relation);
    if (d.ladder) {
      body["ladder"] = to_json(*d.ladder);
      body["verified_bits"] = p.bits * 2;
      body["unique"] = d.unique;
      if (!d.unique) {
        Json alt = Json::array();
        for (const auto& c : d.alternate) alt.push_back(c.get_str());
        body["alternate_relation"] = alt;
      }
    } else {
      body["exclusion_bound"] = d.exclusion_bound.to_string(kResidualDigits);
    }
    return emit(d.ladder.has_value(), body, out, DILOG_NOT_FOUND);
  });
}

dilog_status dilog_special_khoi(int digits, dilog_report** out) {
  return guarded([&] {
    require_out(out);
    const Precision p = digits_precision(digits);
    const KhoiReport k = verify_khoi(p);
    const BigReal threshold = pass_threshold(digits);
    const bool passed = abs(k.residual) < threshold;
    Json body{{"command", "special khoi"},
              {"digits", digits},
              {"statement", "L(1/(phi (phi + sqrt phi))) - L(phi/(phi + sqrt phi)) = pi^2/20"},
              {"first_argument", k.first_argument.to_string(12)},
              {"second_argument", k.second_argument.to_string(12)},
              {"lhs", k.lhs.to_string(30)},
              {"target", k.target.to_string(30)},
              {"residual", sci(k.residual)},
              {"threshold", threshold_text(digits)},
              {"pass", passed},
              {"lima_route", k.lima_route.to_string(30)},
              {"lima_argument_gap", sci(k.lima_argument_gap)},
              {"sign_flipped_residual", sci(k.sign_flipped_residual)}};
    if (!passed && abs(k.sign_flipped_residual) < threshold) {
      body["diagnosis"] = "the left-hand side equals -pi^2/20 to working precision (confirmed by the Lima route); "
                          "the stated right-hand side has the opposite sign";
    }
    return emit(passed, body, out);
  });
}

dilog_status dilog_special_lima(const char* z, int digits, dilog_report** out) {
  return guarded([&] {
    require_out(out);
    if (z == nullptr) throw Error(ErrorCode::InvalidArgument, "z is null");
    const Precision p = digits_precision(digits);
    const Rational zq = parse_rational(z);
    const LimaReport r = verify_lima(BigReal(zq, p + 64), p);
    const BigReal threshold = pass_threshold(digits);
    const bool passed = abs(r.residual) < threshold;
    const Json body{{"command", "special lima"},
                    {"digits", digits},
                    {"statement", "L(z) - L(1/(2 - z)) - L(2z - z^2)/2 + pi^2/12 = 0"},
                    {"z", zq.get_str()},
                    {"reflected_argument", r.reflected.to_string(20)},
                    {"duplicated_argument", r.duplicated.to_string(20)},
                    {"residual", sci(r.residual)},
                    {"threshold", threshold_text(digits)},
                    {"pass", passed}};
    return emit(passed, body, out);
  });
}

dilog_status dilog_special_conjecture(int digits, dilog_report** out) {
  return guarded([&] {
    require_out(out);
    const Precision p = digits_precision(digits);
    const ConjectureReport c = verify_conjecture(p);
    const BigReal threshold = pass_threshold(digits);
    const bool passed = abs(c.residual_re) < threshold && abs(c.residual_im) < threshold;
    auto cx = [](const BigComplex& z) { return Json::array({z.re.to_string(20), z.im.to_string(20)}); };
    const Json body{{"command", "special conjecture"},
                    {"digits", digits},
                    {"statement", "Li2(1/(2 phi^2) - sqrt(-1 - 1/phi^2)/2) - Li2((1 - sqrt((1 - 2 phi)(1 + 2 phi)))/2)"
                                  " = log^2(phi)/2 + 3 pi i log(phi)/5 + pi^2/150"},
                    {"first_argument", cx(c.first_argument)},
                    {"second_argument", cx(c.second_argument)},
                    {"second_modulus", c.second_modulus.to_string(20)},
                    {"first_route", to_string(c.first_route)},
                    {"second_route", to_string(c.second_route)},
                    {"branch", c.branch},
                    {"lhs", cx(c.lhs)},
                    {"rhs", cx(c.rhs)},
                    {"residual_re", sci(c.residual_re)},
                    {"residual_im", sci(c.residual_im)},
                    {"conjugate_residual_im", sci(c.conjugate_residual_im)},
                    {"threshold", threshold_text(digits)},
                    {"pass", passed}};
    return emit(passed, body, out);
  });
}

dilog_status dilog_corpus_list(dilog_report** out) {
  return guarded([&] {
    require_out(out);
    Json rows = Json::array();
    for (const auto& e : corpus()) {
      const Rational d2 = e.ladder.zeta_coeff(2);
      rows.push_back(Json{{"name", e.name},
                          {"index", e.ladder.index()},
                          {"base_degree", e.ladder.base().defpoly().degree()},
                          {"terms", e.ladder.terms().size()},
                          {"d2", d2.get_str()},
                          {"default_digits", e.default_digits}});
    }
    return emit(true, rows, out);
  });
}

dilog_status dilog_corpus_json(char** out) {
  return guarded([&] {
    require_out(out);
    Json all = Json::array();
    for (const auto& e : corpus()) all.push_back(to_json(e));
    *out = copy_string(all.dump(2));
    return DILOG_OK;
  });
}

dilog_status dilog_corpus_export(const char* path) {
  return guarded([&] {
    if (path == nullptr) throw Error(ErrorCode::InvalidArgument, "path is null");
    Json all = Json::array();
    for (const auto& e : corpus()) all.push_back(to_json(e));
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) return set_error(DILOG_IO_ERROR, std::string("cannot open '") + path + "' for writing");
    file << all.dump(2) << '\n';
    file.close();
    if (!file) return set_error(DILOG_IO_ERROR, std::string("write to '") + path + "' failed");
    return DILOG_OK;
  });
}

int dilog_report_passed(const dilog_report* report) { return report != nullptr && report->passed ? 1 : 0; }

const char* dilog_report_json(const dilog_report* report) { return report == nullptr ? "" : report->json.c_str(); }

void dilog_report_free(dilog_report* report) { delete report; }

}  // extern "C"
