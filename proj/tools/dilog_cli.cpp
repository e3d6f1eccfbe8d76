// dilog: verify, certify and rediscover dilogarithm ladders.
//
// Exit codes: 0 all checks pass, 1 a mathematical check failed (or no
// relation was found), 2 usage or input error.

#include "dilog/dilog.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int digits = 60;
  std::string format = "text";

  std::string family;
  int n = 0;
  std::string poly;
  bool unit_interval = false;
  std::string name;
  std::string ladder_file;
  std::vector<int> exponents;
  std::string max_norm = "10000";
  std::string z;
  std::string out;
};

struct ReportDeleter {
  void operator()(dilog_report* r) const { dilog_report_free(r); }
};
using ReportPtr = std::unique_ptr<dilog_report, ReportDeleter>;

struct LadderDeleter {
  void operator()(dilog_ladder* l) const { dilog_ladder_free(l); }
};
using LadderPtr = std::unique_ptr<dilog_ladder, LadderDeleter>;

int exit_code(dilog_status status) {
  switch (status) {
    case DILOG_OK: return 0;
    case DILOG_CHECK_FAILED:
    case DILOG_NOT_FOUND: return 1;
    default: return 2;
  }
}

int report_error(dilog_status status) {
  std::cerr << "error: " << dilog_status_string(status);
  const std::string detail = dilog_last_error();
  if (!detail.empty()) std::cerr << ": " << detail;
  std::cerr << '\n';
  if (status == DILOG_PRECISION_EXHAUSTED) std::cerr << "advice: raise --digits and retry\n";
  return 2;
}

dilog_parity parse_family(const std::string& family) {
  return family == "odd" ? DILOG_ODD : DILOG_EVEN;
}

std::string verdict(const Json& j) { return j.value("pass", false) ? "PASS" : "FAIL"; }

void render_verify(const Json& j) {
  std::cout << verdict(j) << "  " << j["name"].get<std::string>() << "  residual " << j["residual"].get<std::string>()
            << "  (threshold " << j["threshold"].get<std::string>() << ", " << j["digits"].get<int>() << " digits)\n";
  const Json& ladder = j["ladder"];
  std::cout << "  index " << ladder["index"].get<int>() << ", " << ladder["terms"].size() << " terms, restricted "
            << (j["classification"]["restricted"].get<bool>() ? "yes" : "no") << '\n';
  const Json& meta = j["metadata"];
  if (meta.contains("source")) std::cout << "  source: " << meta["source"].get<std::string>() << '\n';
  if (meta.contains("note")) std::cout << "  note: " << meta["note"].get<std::string>() << '\n';
  if (meta.contains("open_question")) std::cout << "  open question: " << meta["open_question"].get<std::string>() << '\n';
  if (meta.contains("rogers_form")) {
    for (const auto& c : meta["rogers_form"]) {
      std::cout << "  rogers form " << c["label"].get<std::string>() << ": " << (c["pass"].get<bool>() ? "PASS" : "FAIL")
                << "  " << c["statement"].get<std::string>() << "  residual " << c["residual"].get<std::string>()
                << '\n';
    }
  }
}

void render_root(const Json& j) {
  std::cout << j["value"].get<std::string>() << '\n';
  std::cout << "  root of " << j["polynomial"].get<std::string>() << " in [" << j["interval"][0].get<std::string>()
            << ", " << j["interval"][1].get<std::string>() << "]\n";
}

void render_exact(const Json& j) {
  for (const char* part : {"step_identities", "cyclotomic"}) {
    for (const auto& e : j[part]["entries"]) {
      std::cout << (e["pass"].get<bool>() ? "CERTIFIED  " : "FAILED     ") << e["identity_name"].get<std::string>() << "  " << e["statement"].get<std::string>() << '\n';
    }
  }
  std::cout << (j["pass"].get<bool>() ? "all identities certified" : "certification failed") << " modulo "
            << j["modulus"].get<std::string>() << '\n';
}

void render_discover(const Json& j) {
  if (!j["found"].get<bool>()) {
    std::cout << "NOT FOUND";
    if (j.contains("exclusion_bound")) {
      std::cout << "  (no relation with norm below " << j["exclusion_bound"].get<std::string>() << ")";
    }
    std::cout << '\n';
    return;
  }
  const Json& labels = j["labels"];
  const Json& coeffs = j["relation"]["coeffs"];
  std::cout << "FOUND  ";
  bool first = true;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string c = coeffs[i].get<std::string>();
    if (c == "0") continue;
    std::cout << (first ? "" : " + ") << c << "*" << labels[i].get<std::string>();
    first = false;
  }
  std::cout << " = 0\n";
  std::cout << "  re-verified at " << j["verified_bits"].get<long>() << " bits; residual bound "
            << j["relation"]["residual_bound"].get<std::string>() << '\n';
  if (!j["unique"].get<bool>()) {
    std::cout << "  not unique: independent relation (";
    for (std::size_t i = 0; i < j["alternate_relation"].size(); ++i) {
      std::cout << (i ? ", " : "") << j["alternate_relation"][i].get<std::string>();
    }
    std::cout << ")\n";
  }
  std::cout << j["ladder"].dump(2) << '\n';
}

void render_special(const Json& j) {
  const std::string cmd = j["command"].get<std::string>();
  std::cout << verdict(j) << "  " << cmd << "  (" << j["digits"].get<int>() << " digits, threshold "
            << j["threshold"].get<std::string>() << ")\n";
  std::cout << "  " << j["statement"].get<std::string>() << '\n';
  if (cmd == "special conjecture") {
    std::cout << "  residual (real)      " << j["residual_re"].get<std::string>() << '\n';
    std::cout << "  residual (imaginary) " << j["residual_im"].get<std::string>() << '\n';
    std::cout << "  branch: " << j["branch"].get<std::string>() << '\n';
    std::cout << "  imaginary residual with conjugated arguments " << j["conjugate_residual_im"].get<std::string>()
              << '\n';
    return;
  }
  std::cout << "  residual " << j["residual"].get<std::string>() << '\n';
  if (cmd == "special khoi") {
    std::cout << "  arguments " << j["first_argument"].get<std::string>() << ", "
              << j["second_argument"].get<std::string>() << '\n';
    std::cout << "  lhs        " << j["lhs"].get<std::string>() << '\n';
    std::cout << "  lima route " << j["lima_route"].get<std::string>() << '\n';
    std::cout << "  residual against -pi^2/20: " << j["sign_flipped_residual"].get<std::string>() << '\n';
    if (j.contains("diagnosis")) std::cout << "  diagnosis: " << j["diagnosis"].get<std::string>() << '\n';
  }
}

void render_corpus_list(const Json& rows) {
  std::printf("%-24s %6s %7s %6s %8s\n", "name", "index", "degree", "terms", "d2");
  for (const auto& r : rows) {
    std::printf("%-24s %6d %7d %6d %8s\n", r["name"].get<std::string>().c_str(), r["index"].get<int>(),
                r["base_degree"].get<int>(), r["terms"].get<int>(), r["d2"].get<std::string>().c_str());
  }
}

// Prints the report in the requested format and maps the status to an exit code.
template <typename Render>
int finish(dilog_status status, dilog_report* raw, const Options& opt, Render render) {
  ReportPtr report(raw);
  if (!report) return report_error(status);
  const char* text = dilog_report_json(report.get());
  if (opt.format == "json") {
    std::cout << text << '\n';
  } else {
    render(Json::parse(text));
  }
  return exit_code(status);
}

int run_root(const Options& opt) {
  dilog_report* r = nullptr;
  const dilog_status s = opt.poly.empty()
                             ? dilog_root_family(parse_family(opt.family), opt.n, opt.digits, opt.unit_interval, &r)
                             : dilog_root(opt.poly.c_str(), opt.digits, opt.unit_interval, &r);
  return finish(s, r, opt, render_root);
}

int run_verify(const Options& opt) {
  dilog_ladder* raw = nullptr;
  dilog_status s;
  if (!opt.name.empty()) {
    s = dilog_ladder_from_corpus(opt.name.c_str(), &raw);
  } else if (!opt.ladder_file.empty()) {
    std::ifstream in(opt.ladder_file);
    if (!in) {
      std::cerr << "error: cannot read '" << opt.ladder_file << "'\n";
      return 2;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    s = dilog_ladder_from_json(buffer.str().c_str(), &raw);
  } else {
    s = dilog_ladder_from_family(parse_family(opt.family), opt.n, &raw);
  }
  LadderPtr ladder(raw);
  if (s != DILOG_OK) return report_error(s);
  dilog_report* r = nullptr;
  const dilog_status status = dilog_verify_ladder(ladder.get(), opt.digits, &r);
  return finish(status, r, opt, render_verify);
}

int run_exact(const Options& opt) {
  dilog_report* r = nullptr;
  const dilog_status status = dilog_verify_exact(parse_family(opt.family), opt.n, &r);
  return finish(status, r, opt, render_exact);
}

int run_discover(const Options& opt) {
  dilog_report* r = nullptr;
  const dilog_status s =
      dilog_discover(opt.poly.c_str(), opt.exponents.data(), opt.exponents.size(), opt.digits, opt.max_norm.c_str(), &r);
  return finish(s, r, opt, render_discover);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Verify, certify and rediscover dilogarithm ladders"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(dilog_version()));
  app.add_option("--digits", opt.digits, "Significant decimal digits (internal bits = ceil(D log2 10) + 64)")
      ->envname("DILOG_DIGITS")
      ->check(CLI::Range(20, 200000))
      ->capture_default_str();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  auto family_options = [&](CLI::App* cmd, bool required) {
    auto* fam = cmd->add_option("--family", opt.family, "Ladder family")->check(CLI::IsMember({"even", "odd"}));
    auto* n = cmd->add_option("--n", opt.n, "Family parameter n >= 1")->check(CLI::PositiveNumber);
    fam->needs(n);
    n->needs(fam);
    if (required) {
      fam->required();
    }
    return fam;
  };

  auto* root = app.add_subcommand("root", "Positive root of a base polynomial and its isolating interval");
  auto* root_family = family_options(root, false);
  auto* root_poly = root->add_option("--poly", opt.poly, "Comma-separated ascending rational coefficients");
  root_poly->excludes(root_family);
  root->add_flag("--unit-interval", opt.unit_interval, "Reject roots outside (0, 1)");

  auto* verify = app.add_subcommand("verify", "Numeric residual check of a ladder");
  auto* verify_family = family_options(verify, false);
  auto* verify_name = verify->add_option("--name", opt.name, "Corpus ladder name");
  auto* verify_file = verify->add_option("--ladder", opt.ladder_file, "Ladder JSON file");
  verify_name->excludes(verify_family)->excludes(verify_file);
  verify_file->excludes(verify_family);

  auto* exact = app.add_subcommand("verify-exact", "Exact certification of the family identities");
  family_options(exact, true);

  auto* disc = app.add_subcommand("discover", "Search for a ladder with PSLQ");
  disc->add_option("--poly", opt.poly, "Base polynomial, ascending coefficients")->required();
  disc->add_option("--exponents", opt.exponents, "Comma-separated exponents")->delimiter(',')->required();
  disc->add_option("--max-norm", opt.max_norm, "Largest relation norm to search")->capture_default_str();

  auto* special = app.add_subcommand("special", "Golden-ratio relations");
  special->require_subcommand(1);
  auto* khoi = special->add_subcommand("khoi", "L(1/(phi (phi + sqrt phi))) - L(phi/(phi + sqrt phi)) = pi^2/20");
  auto* lima = special->add_subcommand("lima", "Duplication relation for the Rogers dilogarithm");
  lima->add_option("--z", opt.z, "Point in (0, 1)")->required();
  auto* conjecture = special->add_subcommand("conjecture", "Complex relation on golden-ratio arguments");

  auto* corpus = app.add_subcommand("corpus", "Named ladders");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "Name, index, base degree and d2 of each entry");
  auto* exp = corpus->add_subcommand("export", "Write the corpus as a JSON array");
  exp->add_option("--out", opt.out, "Output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*root) {
    if (opt.poly.empty() && opt.family.empty()) {
      std::cerr << "error: root needs --poly or --family/--n\n";
      return 2;
    }
    return run_root(opt);
  }
  if (*verify) {
    if (opt.name.empty() && opt.ladder_file.empty() && opt.family.empty()) {
      std::cerr << "error: verify needs --name, --ladder or --family/--n\n";
      return 2;
    }
    return run_verify(opt);
  }
  if (*exact) return run_exact(opt);
  if (*disc) return run_discover(opt);
  if (*khoi || *lima || *conjecture) {
    dilog_report* r = nullptr;
    const dilog_status s = *khoi  ? dilog_special_khoi(opt.digits, &r)
                           : *lima ? dilog_special_lima(opt.z.c_str(), opt.digits, &r)
                                   : dilog_special_conjecture(opt.digits, &r);
    return finish(s, r, opt, render_special);
  }
  if (*list) {
    dilog_report* r = nullptr;
    const dilog_status status = dilog_corpus_list(&r);
    return finish(status, r, opt, render_corpus_list);
  }
  if (*exp) {
    const dilog_status s = dilog_corpus_export(opt.out.c_str());
    if (s != DILOG_OK) return report_error(s);
    if (opt.format == "json") {
      std::cout << Json{{"command", "corpus export"}, {"out", opt.out}}.dump(2) << '\n';
    } else {
      std::cout << "wrote corpus to " << opt.out << '\n';
    }
    return 0;
  }
  return 2;
}
