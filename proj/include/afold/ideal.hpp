#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "afold/polynomial.hpp"

namespace afold {

struct GroebnerStats;

struct GroebnerOptions {
  uint64_t max_pairs = 2'000'000;  // S-pairs processed before giving up
  int64_t max_ms = 600'000;        // wall-clock budget per basis; 0 = unlimited
  GroebnerStats* sink = nullptr;   // when set, every finished basis adds its stats here
};

struct GroebnerStats {
  uint64_t pairs_generated = 0;
  uint64_t pairs_reduced = 0;
  uint64_t zero_reductions = 0;
  size_t basis_size = 0;
  int64_t ms = 0;
};

// Structured budget overrun. Callers that verify identities catch this and
// return an inconclusive verdict instead of a wrong answer.
struct BudgetExceeded : std::runtime_error {
  GroebnerStats stats;
  BudgetExceeded(const std::string& msg, GroebnerStats s)
      : std::runtime_error(msg), stats(s) {}
};

// Reduced basis: monic elements, ascending leading terms, no leading term
// divides any monomial of another element. Unique per (ideal, order).
struct GroebnerBasis {
  MonomialOrder order = MonomialOrder::degrevlex();
  std::vector<Polynomial> elems;
  GroebnerStats stats;
};

// Ideal given by generators. Value type; copies share the basis cache.
// Zero polynomials are dropped at construction; an empty list is the zero
// ideal. Single-threaded use assumed (cache is not locked).
class Ideal {
 public:
  Ideal() = default;
  Ideal(VarSet vars, std::vector<Polynomial> gens);

  static Ideal zero(const VarSet& vars) { return Ideal(vars, {}); }
  static Ideal unit(const VarSet& vars) {
    return Ideal(vars, {Polynomial::constant(vars, Rational(1))});
  }

  const VarSet& vars() const { return vars_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  const GroebnerBasis& groebner(const MonomialOrder& ord = MonomialOrder::degrevlex(),
                                const GroebnerOptions& opt = {}) const;

  // Installs a basis known by construction (e.g. inherited via elimination).
  void seed_groebner(GroebnerBasis gb) const;

 private:
  VarSet vars_;
  std::vector<Polynomial> gens_;
  mutable std::shared_ptr<std::map<std::string, GroebnerBasis>> cache_;
};

}  // namespace afold
