#pragma once

#include "afold/fold_ideal.hpp"
#include "afold/resolution.hpp"

#include <optional>

namespace afold {

// One verified claim: which check ran, on which input, with which parameters.
// `gb` aggregates the Groebner work done for the record (counts only; time
// lives in `ms` so emitters can segregate it).
struct CheckRecord {
  std::string check;
  std::string input;
  std::vector<std::pair<std::string, long>> params;
  Verdict verdict = Verdict::Inconclusive;
  std::string witness;  // counterexample or budget note; empty when true
  std::vector<PrimaryComponent> components;
  std::vector<std::string> items;  // generator or value listings
  std::optional<BettiTable> betti;
  GroebnerStats gb;
  int64_t ms = 0;
};

struct Report {
  std::vector<CheckRecord> records;
  std::vector<std::string> notes;  // input warnings; not checks

  void add(CheckRecord rec) { records.push_back(std::move(rec)); }
  // Order-stable assembly: sorted by check id, input id, parameters.
  void sort();
  // 0 all true, 1 any false, 2 any inconclusive (false dominates).
  int exit_code() const;

  // Deterministic given identical inputs: every timing (record ms and basis
  // ms) is segregated into the trailing "ms" array.
  std::string to_json() const;
  std::string to_csv() const;   // one row per record plus a header
  std::string to_text() const;  // includes Betti diagrams and listings
};

}  // namespace afold
