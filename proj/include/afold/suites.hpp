#pragma once

#include "afold/arrangement.hpp"
#include "afold/report.hpp"

namespace afold {

// One run request. Empty ranges fall back to each suite's default grid;
// an explicit arrangement replaces the catalog sweep.
struct RunConfig {
  std::string verb = "verify";  // verify | decompose | betti | rees-gens | alpha
  std::string suite;            // decomposition | resolution | powers | rees | star | all
  std::optional<Arrangement> arrangement;
  std::string input_id;  // label used in records; catalog name or file tag
  std::vector<long> a, e, c, m, t, N, s;
  GroebnerOptions budget;
  bool include_generic5 = false;  // unlocks the heavy blow-up theorems
};

// "all" -> empty (use the default grid), "3" -> {3}, "1..4" -> {1,2,3,4}.
std::vector<long> parse_range_spec(const std::string& spec);

// Executes the request and returns the sorted report. StructuralError on an
// unknown verb or suite, or on an input outside a check's domain.
Report run(const RunConfig& cfg);

}  // namespace afold
