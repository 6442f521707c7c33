// Acceptance gate: runs every suite over its default grid and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.
// --with-generic5 adds the heavy five-form blow-up theorems, where an
// inconclusive (budget) outcome is tolerated but a refutation is not.

#include <cstdio>
#include <cstring>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "afold/catalog.hpp"
#include "afold/rees.hpp"
#include "afold/suites.hpp"

using namespace afold;

namespace {

struct Criterion {
  std::string name;
  std::set<std::string> checks;
  int64_t target_ms;  // 0 = untimed
  bool pass = true;
  std::string note;
  int64_t ms = 0;
  long count = 0;
  Criterion(std::string n, std::set<std::string> ch, int64_t target = 0)
      : name(std::move(n)), checks(std::move(ch)), target_ms(target) {}
};

std::string describe(const CheckRecord& r) {
  std::string out = r.check + " @ " + r.input;
  for (const auto& [k, v] : r.params) out += " " + k + "=" + std::to_string(v);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool with_generic5 = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--with-generic5") == 0) with_generic5 = true;

  RunConfig cfg;
  cfg.verb = "verify";
  cfg.suite = "all";
  cfg.include_generic5 = with_generic5;
  if (with_generic5) cfg.budget.max_ms = 7'200'000;

  Report rep = run(cfg);

  std::vector<Criterion> cs{
      {"decomposition suite", {"decomposition", "membership-bound"}, 300'000},
      {"linear resolution suite", {"linear-resolution", "quotient-regularity"}, 600'000},
      {"proof identity suite", {"colon", "saturation", "expansion"}, 300'000},
      {"linear powers suite", {"linear-power", "power-regularity"}, 600'000},
      {"blow-up presentation suite", {"fiber-presentation", "fiber-type", "low-x-degrees"},
       900'000},
      {"generator count formula", {"generator-count"}, 60'000},
      {"star configuration suite",
       {"star-alpha", "generation-degree", "containment-1", "containment-2", "containment-3",
        "power-decomposition", "alpha-inequality-4", "alpha-inequality-5", "alpha-inequality-6"},
       1'200'000},
      {"engine self-checks",
       {"groebner-selfcheck", "complex-selfcheck", "euler-selfcheck", "substitution-vanishing"}},
  };

  for (const auto& r : rep.records) {
    Criterion* c = nullptr;
    for (auto& candidate : cs)
      if (candidate.checks.count(r.check)) c = &candidate;
    if (!c) {
      std::printf("unbucketed check: %s\n", describe(r).c_str());
      return 99;
    }
    ++c->count;
    // The five-form blow-up kernels may exhaust their budget; a refutation
    // still fails. Their time sits outside the 15-minute target.
    bool heavy_optional = c == &cs[4] && r.input == "generic5";
    if (!heavy_optional) c->ms += r.ms;
    if (r.verdict == Verdict::True) continue;
    if (r.verdict == Verdict::Inconclusive && heavy_optional) {
      c->note += " [" + describe(r) + ": inconclusive, allowed]";
      continue;
    }
    c->pass = false;
    if (c->note.size() < 400)
      c->note += " [" + describe(r) + ": " + to_string(r.verdict) +
                 (r.witness.empty() ? "" : ", " + r.witness) + "]";
  }

  // The observed minimal generator counts, frozen.
  const std::pair<const char*, unsigned> frozen_mu[] = {
      {"generic4", 6}, {"near_pencil4", 5}, {"generic5", 10}};
  for (const auto& [id, want] : frozen_mu) {
    unsigned got = expected_generator_count(*catalog_find(id));
    if (got != want) {
      cs[5].pass = false;
      cs[5].note += std::string(" [") + id + ": mu " + std::to_string(got) + ", expected " +
                    std::to_string(want) + "]";
    }
  }
  if (!with_generic5) cs[4].note += " [generic5 theorems skipped; opt in with --with-generic5]";

  int failures = 0;
  for (size_t i = 0; i < cs.size(); ++i) {
    Criterion& c = cs[i];
    if (c.count == 0) {
      c.pass = false;
      c.note += " [no checks ran]";
    }
    if (c.target_ms && c.ms > c.target_ms) {
      c.pass = false;
      c.note += " [over time target: " + std::to_string(c.ms) + " ms]";
    }
    if (!c.pass) ++failures;
    std::printf("%s criterion %zu %s: %ld checks, %lld ms%s\n", c.pass ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), c.count, static_cast<long long>(c.ms), c.note.c_str());
  }
  return failures;
}
