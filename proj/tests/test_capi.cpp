#include <afold/afold.h>

#include <string>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

namespace {

struct Run {
  afold_status status;
  afold_report* report = nullptr;
  explicit Run(const std::string& request) { status = afold_run(request.c_str(), &report); }
  ~Run() { afold_report_free(report); }
  Run(const Run&) = delete;
  Run& operator=(const Run&) = delete;
  std::string render(const char* format) const {
    const char* text = afold_report_render(report, format);
    return text ? std::string(text) : std::string();
  }
};

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("abi version") { CHECK(afold_abi_version() == 1); }

TEST_CASE("verify catalog suite end to end") {
  Run run(R"({"verb":"verify","suite":"decomposition","catalog":"boolean3","a":"all"})");
  REQUIRE(run.status == AFOLD_OK);
  REQUIRE(run.report != nullptr);
  CHECK(afold_report_exit_code(run.report) == 0);
  std::string json = run.render("json");
  CHECK(contains(json, "\"check\":\"decomposition\""));
  CHECK(contains(json, "\"verdict\":\"true\""));
  CHECK(!contains(json, "\"verdict\":\"false\""));
  std::string csv = run.render("csv");
  CHECK(csv.rfind("check,input,params,verdict,witness,pairs,basis,ms\n", 0) == 0);
  std::string text = run.render("text");
  CHECK(contains(text, "0 false, 0 inconclusive"));
  CHECK(afold_report_render(run.report, "yaml") == nullptr);
  CHECK(contains(afold_last_error(), "unknown format"));
}

TEST_CASE("inline arrangements merge proportional forms with a warning") {
  Run run(
      R"({"verb":"decompose",
          "arrangement":{"vars":["x","y"],"forms":[{"coeffs":[1,0]},{"coeffs":[2,0]}]},
          "a":"1"})");
  REQUIRE(run.status == AFOLD_OK);
  CHECK(afold_report_exit_code(run.report) == 0);
  std::string json = run.render("json");
  CHECK(contains(json, "\"notes\""));
  CHECK(contains(json, "proportional"));
  CHECK(contains(run.render("text"), "note: "));
}

TEST_CASE("arrangement text goes through the structured parser") {
  Run run(R"({"verb":"decompose","arrangement_text":"{\"vars\": [\"x\"","a":"1"})");
  CHECK(run.status == AFOLD_PARSE_ERROR);
  CHECK(afold_last_error()[0] != '\0');
}

TEST_CASE("malformed request json is a parse error") {
  Run run("{\"verb\": ");
  CHECK(run.status == AFOLD_PARSE_ERROR);
}

TEST_CASE("usage errors") {
  CHECK(Run(R"({"verb":"conjecture"})").status == AFOLD_USAGE_ERROR);
  CHECK(Run(R"({"verb":"verify","suite":"nosuchsuite"})").status == AFOLD_USAGE_ERROR);
  CHECK(Run(R"({"verb":"verify","suite":"rees","catalog":"nosuchthing"})").status ==
        AFOLD_USAGE_ERROR);
  CHECK(Run(R"({"verb":"verify","suite":"star","N":7})").status == AFOLD_USAGE_ERROR);
  CHECK(Run(R"({"verb":"verify","suite":"all","a":{"lo":1}})").status == AFOLD_USAGE_ERROR);
  afold_report* out = nullptr;
  CHECK(afold_run(nullptr, &out) == AFOLD_USAGE_ERROR);
  CHECK(afold_run("{}", nullptr) == AFOLD_USAGE_ERROR);
}

TEST_CASE("betti verb renders tables") {
  Run run(R"({"verb":"betti","catalog":"boolean3","a":"2"})");
  REQUIRE(run.status == AFOLD_OK);
  CHECK(contains(run.render("text"), "total"));
  CHECK(contains(run.render("json"), "\"betti\""));
}

TEST_CASE("alpha verb over a range") {
  Run run(R"({"verb":"alpha","catalog":"generic4","c":"2","m":"1..2"})");
  REQUIRE(run.status == AFOLD_OK);
  CHECK(afold_report_exit_code(run.report) == 0);
  CHECK(contains(run.render("text"), "formula = 4"));
}

TEST_CASE("budget exhaustion surfaces as exit code two") {
  Run run(
      R"({"verb":"verify","suite":"decomposition","catalog":"generic5","budget_pairs":1})");
  REQUIRE(run.status == AFOLD_OK);
  CHECK(afold_report_exit_code(run.report) == 2);
  CHECK(contains(run.render("text"), "budget exceeded"));
}

TEST_CASE("null report handling") {
  CHECK(afold_report_exit_code(nullptr) == 3);
  CHECK(afold_report_render(nullptr, "json") == nullptr);
  afold_report_free(nullptr);
}
