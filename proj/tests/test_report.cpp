#include "afold/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "afold/catalog.hpp"
#include "afold/suites.hpp"

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

using namespace afold;

namespace {

CheckRecord named(std::string check, std::string input, Verdict v) {
  CheckRecord rec;
  rec.check = std::move(check);
  rec.input = std::move(input);
  rec.verdict = v;
  return rec;
}

long count_lines(const std::string& text) {
  return static_cast<long>(std::count(text.begin(), text.end(), '\n'));
}

RunConfig on_catalog(const std::string& verb, const std::string& suite, const std::string& id) {
  RunConfig cfg;
  cfg.verb = verb;
  cfg.suite = suite;
  cfg.arrangement = *catalog_find(id);
  cfg.input_id = id;
  return cfg;
}

long count_check(const Report& rep, const std::string& check) {
  long n = 0;
  for (const auto& r : rep.records)
    if (r.check == check) ++n;
  return n;
}

bool all_true(const Report& rep) {
  return std::all_of(rep.records.begin(), rep.records.end(),
                     [](const CheckRecord& r) { return r.verdict == Verdict::True; });
}

}  // namespace

TEST_CASE("empty report serialization") {
  Report rep;
  CHECK(rep.to_json() == "{\"checks\":[]}");
  CHECK(rep.to_csv() == "check,input,params,verdict,witness,pairs,basis,ms\n");
  CHECK(rep.exit_code() == 0);
}

TEST_CASE("exit codes and precedence") {
  Report rep;
  rep.add(named("a", "x", Verdict::True));
  CHECK(rep.exit_code() == 0);
  rep.add(named("b", "x", Verdict::Inconclusive));
  CHECK(rep.exit_code() == 2);
  rep.add(named("c", "x", Verdict::False));
  CHECK(rep.exit_code() == 1);  // false dominates inconclusive
}

TEST_CASE("record sorting is by check, input, then parameters") {
  Report rep;
  CheckRecord second = named("colon", "boolean3", Verdict::True);
  second.params = {{"a", 2}};
  CheckRecord first = named("colon", "boolean3", Verdict::True);
  first.params = {{"a", 1}};
  rep.add(named("saturation", "boolean3", Verdict::True));
  rep.add(std::move(second));
  rep.add(named("colon", "braid3", Verdict::True));
  rep.add(std::move(first));
  rep.sort();
  CHECK(rep.records[0].input == "boolean3");
  CHECK(rep.records[0].params == std::vector<std::pair<std::string, long>>{{"a", 1}});
  CHECK(rep.records[1].params == std::vector<std::pair<std::string, long>>{{"a", 2}});
  CHECK(rep.records[2].input == "braid3");
  CHECK(rep.records[3].check == "saturation");
}

TEST_CASE("single record carries every required field") {
  Report rep;
  CheckRecord rec = named("decomposition", "generic4", Verdict::False);
  rec.params = {{"a", 2}};
  rec.witness = "x*y - z^2";
  rec.gb.pairs_generated = 7;
  rec.gb.basis_size = 3;
  rec.ms = 12;
  rep.add(std::move(rec));

  auto doc = nlohmann::json::parse(rep.to_json());
  REQUIRE(doc["checks"].size() == 1);
  const auto& c = doc["checks"][0];
  CHECK(c["check"] == "decomposition");
  CHECK(c["input"] == "generic4");
  CHECK(c["params"]["a"] == 2);
  CHECK(c["verdict"] == "false");
  CHECK(c["witness"] == "x*y - z^2");
  CHECK(c["gb"]["pairs"] == 7);
  CHECK(c["gb"]["basis"] == 3);
  CHECK(doc["ms"][0] == 12);

  std::string csv = rep.to_csv();
  CHECK(count_lines(csv) == 2);
  CHECK(csv.find("decomposition,generic4,a=2,false,x*y - z^2,7,3,12") != std::string::npos);

  std::string text = rep.to_text();
  CHECK(text.find("[FALSE ] decomposition generic4 a=2") != std::string::npos);
  CHECK(text.find("witness: x*y - z^2") != std::string::npos);
  CHECK(text.find("1 checks: 0 true, 1 false, 0 inconclusive") != std::string::npos);
}

TEST_CASE("csv escapes fields with embedded separators") {
  Report rep;
  CheckRecord rec = named("equality", "inline", Verdict::False);
  rec.witness = "needs, quoting \"here\"";
  rep.add(std::move(rec));
  CHECK(rep.to_csv().find("\"needs, quoting \"\"here\"\"\"") != std::string::npos);
}

TEST_CASE("range specs") {
  CHECK(parse_range_spec("all").empty());
  CHECK(parse_range_spec("").empty());
  CHECK(parse_range_spec("3") == std::vector<long>{3});
  CHECK(parse_range_spec("1..4") == std::vector<long>{1, 2, 3, 4});
  CHECK_THROWS_AS(parse_range_spec("x"), StructuralError);
  CHECK_THROWS_AS(parse_range_spec("4..1"), StructuralError);
  CHECK_THROWS_AS(parse_range_spec("1..z"), StructuralError);
}

TEST_CASE("decomposition suite on one catalog entry") {
  Report rep = run(on_catalog("verify", "decomposition", "boolean3"));
  CHECK(all_true(rep));
  CHECK(rep.exit_code() == 0);
  // a ranges over 1..3; the identity sweep adds one colon and one expansion
  // record per form.
  CHECK(count_check(rep, "decomposition") == 3);
  CHECK(count_check(rep, "membership-bound") == 3);
  CHECK(count_check(rep, "groebner-selfcheck") == 3);
  CHECK(count_check(rep, "saturation") == 3);
  CHECK(count_check(rep, "colon") == 9);
  CHECK(count_check(rep, "expansion") == 9);
  CHECK(std::is_sorted(rep.records.begin(), rep.records.end(),
                       [](const CheckRecord& x, const CheckRecord& y) {
                         return std::tie(x.check, x.input, x.params) <
                                std::tie(y.check, y.input, y.params);
                       }));
  // Basis statistics flow back from the engine.
  bool saw_pairs = false;
  for (const auto& r : rep.records)
    if (r.check == "decomposition" && r.gb.pairs_generated > 0) saw_pairs = true;
  CHECK(saw_pairs);
}

TEST_CASE("identical configs give identical reports modulo timing") {
  RunConfig cfg = on_catalog("verify", "resolution", "generic4");
  auto first = nlohmann::json::parse(run(cfg).to_json());
  auto second = nlohmann::json::parse(run(cfg).to_json());
  first.erase("ms");
  second.erase("ms");
  CHECK(first.dump() == second.dump());
}

TEST_CASE("resolution suite attaches tables and verifies degrees") {
  Report rep = run(on_catalog("verify", "resolution", "generic4"));
  CHECK(all_true(rep));
  CHECK(count_check(rep, "linear-resolution") == 4);
  CHECK(count_check(rep, "quotient-regularity") == 4);
  CHECK(count_check(rep, "complex-selfcheck") == 4);
  CHECK(count_check(rep, "euler-selfcheck") == 4);
  for (const auto& r : rep.records)
    if (r.check == "linear-resolution") {
      REQUIRE(r.betti.has_value());
      CHECK(r.betti->entries.size() > 0);
    }
}

TEST_CASE("powers suite covers the four-form catalog in three variables") {
  RunConfig cfg;
  cfg.verb = "verify";
  cfg.suite = "powers";
  Report rep = run(cfg);
  CHECK(all_true(rep));
  // generic4, near_pencil4, mixed3: a in {2,3} x e in {1,2}.
  CHECK(count_check(rep, "linear-power") == 12);
  CHECK(count_check(rep, "power-regularity") == 3);
  long mixed = 0;
  for (const auto& r : rep.records)
    if (r.input == "mixed3") ++mixed;
  CHECK(mixed > 0);
}

TEST_CASE("rees suite gates the heavy five-form theorems") {
  RunConfig cfg;
  cfg.verb = "verify";
  cfg.suite = "rees";
  Report rep = run(cfg);
  CHECK(all_true(rep));
  std::set<std::string> generic5_checks;
  for (const auto& r : rep.records)
    if (r.input == "generic5") generic5_checks.insert(r.check);
  CHECK(generic5_checks ==
        std::set<std::string>{"substitution-vanishing", "generator-count"});
  std::set<std::string> generic4_checks;
  for (const auto& r : rep.records)
    if (r.input == "generic4") generic4_checks.insert(r.check);
  CHECK(generic4_checks.count("fiber-presentation") == 1);
  CHECK(generic4_checks.count("fiber-type") == 1);
  CHECK(generic4_checks.count("low-x-degrees") == 1);
}

TEST_CASE("star suite runs a single grid cell") {
  RunConfig cfg;
  cfg.verb = "verify";
  cfg.suite = "star";
  cfg.N = {2};
  cfg.s = {4};
  cfg.m = {1, 2};
  Report rep = run(cfg);
  CHECK(all_true(rep));
  CHECK(count_check(rep, "star-alpha") == 2);
  CHECK(count_check(rep, "containment-1") == 2);
  CHECK(count_check(rep, "power-decomposition") == 2);
  CHECK(count_check(rep, "alpha-inequality-4") == 1);
  CHECK(count_check(rep, "alpha-inequality-6") == 1);
  for (const auto& r : rep.records) {
    CHECK(r.input == "generic4");
    REQUIRE(r.params.size() >= 3);
    CHECK(r.params[0] == std::pair<std::string, long>{"N", 2});
    CHECK(r.params[1] == std::pair<std::string, long>{"s", 4});
    CHECK(r.params[2] == std::pair<std::string, long>{"c", 2});
  }
}

TEST_CASE("decompose verb lists components") {
  RunConfig cfg = on_catalog("decompose", "", "boolean3");
  cfg.a = {2};
  Report rep = run(cfg);
  REQUIRE(rep.records.size() == 1);
  const CheckRecord& r = rep.records[0];
  CHECK(r.verdict == Verdict::True);
  CHECK(r.components.size() == 4);  // three coordinate points and the origin
  std::string text = rep.to_text();
  CHECK(text.find("<x, y>") != std::string::npos);
  auto doc = nlohmann::json::parse(rep.to_json());
  CHECK(doc["checks"][0]["components"].size() == 4);
}

TEST_CASE("betti verb certifies its table") {
  RunConfig cfg = on_catalog("betti", "", "boolean3");
  cfg.a = {2};
  Report rep = run(cfg);
  REQUIRE(rep.records.size() == 1);
  REQUIRE(rep.records[0].betti.has_value());
  CHECK(rep.records[0].verdict == Verdict::True);
  CHECK(rep.records[0].betti->at(0, 2) == 3);
  CHECK(rep.records[0].betti->at(1, 3) == 2);
  CHECK(rep.to_text().find("total") != std::string::npos);
}

TEST_CASE("rees-gens verb lists generators with bidegrees") {
  RunConfig cfg = on_catalog("rees-gens", "", "near_pencil4");
  Report rep = run(cfg);
  REQUIRE(rep.records.size() == 1);
  const CheckRecord& r = rep.records[0];
  CHECK(r.verdict == Verdict::True);
  REQUIRE(!r.params.empty());
  CHECK(r.params[0].first == "count");
  CHECK(r.params[0].second >= 5);  // at least the five fiber generators
  bool saw_circuit_bidegree = false;
  for (const auto& item : r.items)
    if (item.find("bidegree (0, 1)") != std::string::npos) saw_circuit_bidegree = true;
  CHECK(saw_circuit_bidegree);
  // Every generator the verb prints is listed after the histogram lines.
  CHECK(static_cast<long>(r.items.size()) > r.params[0].second);
}

TEST_CASE("alpha verb reports engine and formula values") {
  RunConfig cfg = on_catalog("alpha", "", "generic4");
  cfg.c = {2};
  cfg.m = {1, 2};
  Report rep = run(cfg);
  REQUIRE(rep.records.size() == 2);
  CHECK(all_true(rep));
  CHECK(rep.records[0].items == std::vector<std::string>{"alpha = 3", "formula = 3"});
  CHECK(rep.records[1].items == std::vector<std::string>{"alpha = 4", "formula = 4"});
}

TEST_CASE("budget exhaustion is recorded, never aborts") {
  RunConfig cfg = on_catalog("verify", "decomposition", "generic5");
  cfg.budget.max_pairs = 1;
  Report rep = run(cfg);
  CHECK(rep.exit_code() == 2);
  bool saw_budget_note = false;
  for (const auto& r : rep.records)
    if (r.verdict == Verdict::Inconclusive && r.witness.find("budget") != std::string::npos)
      saw_budget_note = true;
  CHECK(saw_budget_note);
}

TEST_CASE("bad requests throw structural errors") {
  RunConfig cfg;
  cfg.verb = "verify";
  cfg.suite = "nosuchsuite";
  CHECK_THROWS_AS(run(cfg), StructuralError);
  cfg.verb = "nosuchverb";
  CHECK_THROWS_AS(run(cfg), StructuralError);
  RunConfig empty = on_catalog("verify", "decomposition", "boolean3");
  empty.a = {9};  // outside 1..n for every selected arrangement
  CHECK_THROWS_AS(run(empty), StructuralError);
}
