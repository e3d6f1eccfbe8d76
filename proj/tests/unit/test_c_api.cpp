// Exercises the shared library through dilog.h only.
#include "dilog/dilog.h"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>

namespace {

using Json = nlohmann::json;

struct ReportDeleter {
  void operator()(dilog_report* r) const { dilog_report_free(r); }
};
struct LadderDeleter {
  void operator()(dilog_ladder* l) const { dilog_ladder_free(l); }
};
using Report = std::unique_ptr<dilog_report, ReportDeleter>;
using LadderPtr = std::unique_ptr<dilog_ladder, LadderDeleter>;

Json json_of(const Report& r) { return Json::parse(dilog_report_json(r.get())); }

LadderPtr corpus_ladder(const char* name) {
  dilog_ladder* raw = nullptr;
  REQUIRE(dilog_ladder_from_corpus(name, &raw) == DILOG_OK);
  return LadderPtr(raw);
}

}  // namespace

TEST_SUITE("c_api") {
  TEST_CASE("version and status strings") {
    CHECK(std::string(dilog_version()) == "0.1.0");
    CHECK(std::string(dilog_status_string(DILOG_OK)) == "ok");
    CHECK_FALSE(std::string(dilog_status_string(DILOG_PARSE_ERROR)).empty());
  }

  TEST_CASE("verify a corpus ladder") {
    const LadderPtr ladder = corpus_ladder("al_w_quintic");
    dilog_report* raw = nullptr;
    REQUIRE(dilog_verify_ladder(ladder.get(), 60, &raw) == DILOG_OK);
    const Report report(raw);
    CHECK(dilog_report_passed(report.get()) == 1);
    const Json j = json_of(report);
    CHECK(j["pass"] == true);
    CHECK(j["digits"] == 60);
    CHECK(j["metadata"]["open_question"].is_string());
    CHECK_FALSE(j["metadata"]["open_question"].get<std::string>().empty());
  }

  TEST_CASE("family ladders and JSON round trip") {
    dilog_ladder* raw = nullptr;
    REQUIRE(dilog_ladder_from_family(DILOG_ODD, 3, &raw) == DILOG_OK);
    const LadderPtr ladder(raw);
    char* text = nullptr;
    REQUIRE(dilog_ladder_to_json(ladder.get(), &text) == DILOG_OK);
    dilog_ladder* back = nullptr;
    CHECK(dilog_ladder_from_json(text, &back) == DILOG_OK);
    dilog_string_free(text);
    const LadderPtr again(back);
    dilog_report* rr = nullptr;
    REQUIRE(dilog_verify_ladder(again.get(), 40, &rr) == DILOG_OK);
    Report(rr).reset();
    CHECK(dilog_ladder_from_family(DILOG_EVEN, 0, &raw) == DILOG_INVALID_ARGUMENT);
  }

  TEST_CASE("errors are reported, never thrown") {
    dilog_ladder* ladder = nullptr;
    CHECK(dilog_ladder_from_corpus("nope", &ladder) == DILOG_UNKNOWN_NAME);
    CHECK(ladder == nullptr);
    CHECK(std::string(dilog_last_error()).find("nope") != std::string::npos);
    CHECK(dilog_ladder_from_corpus(nullptr, &ladder) == DILOG_INVALID_ARGUMENT);
    CHECK(dilog_ladder_from_corpus("watson", nullptr) == DILOG_INVALID_ARGUMENT);
    CHECK(dilog_ladder_from_json("{not json", &ladder) == DILOG_PARSE_ERROR);
    CHECK(dilog_ladder_from_json("{}", &ladder) == DILOG_PARSE_ERROR);
    dilog_report* report = nullptr;
    CHECK(dilog_verify_ladder(nullptr, 60, &report) == DILOG_INVALID_ARGUMENT);
    const LadderPtr w = corpus_ladder("watson");
    CHECK(dilog_verify_ladder(w.get(), 5, &report) == DILOG_INVALID_ARGUMENT);
    CHECK(report == nullptr);
    CHECK(dilog_root("1,1", 40, 0, &report) == DILOG_NO_POSITIVE_ROOT);
    CHECK(dilog_root("1,x", 40, 0, &report) == DILOG_PARSE_ERROR);
    CHECK(dilog_special_lima("1.5", 40, &report) == DILOG_INVALID_ARGUMENT);
    CHECK(dilog_corpus_export("/nonexistent-dir/out.json") == DILOG_IO_ERROR);
    CHECK(dilog_report_passed(nullptr) == 0);
    CHECK(std::string(dilog_report_json(nullptr)).empty());
    dilog_report_free(nullptr);
    dilog_ladder_free(nullptr);
  }

  TEST_CASE("roots") {
    dilog_report* raw = nullptr;
    REQUIRE(dilog_root_family(DILOG_EVEN, 1, 40, 1, &raw) == DILOG_OK);
    const Json j = json_of(Report(raw));
    CHECK(j.dump().find("0.6180339887") != std::string::npos);
    CHECK(dilog_root("-1,-1,1", 40, 1, &raw) != DILOG_OK);
  }

  TEST_CASE("exact certification") {
    dilog_report* raw = nullptr;
    REQUIRE(dilog_verify_exact(DILOG_EVEN, 4, &raw) == DILOG_OK);
    const Report r(raw);
    CHECK(dilog_report_passed(r.get()) == 1);
  }

  TEST_CASE("discover") {
    const int exps[] = {1, 2, 3, 6};
    dilog_report* raw = nullptr;
    REQUIRE(dilog_discover("-1,1,1", exps, 4, 60, "10000", &raw) == DILOG_OK);
    const Json cox = json_of(Report(raw));
    CHECK(cox["found"] == true);
    CHECK(cox["unique"] == false);
    CHECK(cox.contains("alternate_relation"));
    const int family[] = {1, 3, 4};
    REQUIRE(dilog_discover("-1,-1,-1,1,1,1,1", family, 3, 60, "10000", &raw) == DILOG_OK);
    const Json j = json_of(Report(raw));
    CHECK(j["found"] == true);
    CHECK(j["unique"] == true);
    CHECK(dilog_discover("-1,-1,1", family, 3, 60, "-5", &raw) == DILOG_INVALID_ARGUMENT);
    CHECK(dilog_discover("-1,-1,1", nullptr, 0, 60, "10", &raw) == DILOG_INVALID_ARGUMENT);
  }

  TEST_CASE("special relations produce reports whatever the verdict") {
    dilog_report* raw = nullptr;
    const dilog_status khoi = dilog_special_khoi(60, &raw);
    CHECK((khoi == DILOG_OK || khoi == DILOG_CHECK_FAILED));
    REQUIRE(raw != nullptr);
    const Report kr(raw);
    CHECK(dilog_report_passed(kr.get()) == (khoi == DILOG_OK ? 1 : 0));
    CHECK(json_of(kr).contains("residual"));

    REQUIRE(dilog_special_lima("3/10", 60, &raw) == DILOG_OK);
    Report(raw).reset();
    const dilog_status conj = dilog_special_conjecture(60, &raw);
    CHECK((conj == DILOG_OK || conj == DILOG_CHECK_FAILED));
    REQUIRE(raw != nullptr);
    CHECK(json_of(Report(raw)).contains("branch"));
  }

  TEST_CASE("corpus listing and export") {
    dilog_report* raw = nullptr;
    REQUIRE(dilog_corpus_list(&raw) == DILOG_OK);
    const Json list = json_of(Report(raw));
    char* text = nullptr;
    REQUIRE(dilog_corpus_json(&text) == DILOG_OK);
    const Json all = Json::parse(text);
    dilog_string_free(text);
    CHECK(all.size() >= 10);
    const auto path = std::filesystem::temp_directory_path() / "dilog_c_api_corpus.json";
    REQUIRE(dilog_corpus_export(path.c_str()) == DILOG_OK);
    CHECK(std::filesystem::file_size(path) > 100);
    std::filesystem::remove(path);
    CHECK(list.dump().find("bailey-broadhurst") != std::string::npos);
  }
}
