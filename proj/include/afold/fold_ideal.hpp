#pragma once

#include "afold/arrangement.hpp"
#include "afold/groebner.hpp"

namespace afold {

// Three-valued outcome: a budget overrun is reported, never guessed.
enum class Verdict { True, False, Inconclusive };
std::string to_string(Verdict v);

struct PrimaryComponent {
  std::vector<Polynomial> basis;  // linear basis of the prime
  unsigned exponent = 0;
};

struct CheckResult {
  Verdict verdict = Verdict::Inconclusive;
  std::string detail;  // witness or budget note; empty when verdict is True
  std::vector<PrimaryComponent> components;
  int64_t ms = 0;
};

// Products of a forms drawn from the multiset (exponent capped by each
// multiplicity). a = 0 gives {1}; a above the total count gives {}.
std::vector<Polynomial> standard_generators(const Arrangement& sigma, unsigned a);

Ideal fold_ideal(const Arrangement& sigma, unsigned a);

// Components predicted by the lattice: every flat contributes its prime with
// exponent a - n + nu, kept when positive.
std::vector<PrimaryComponent> predicted_decomposition(const Arrangement& sigma, unsigned a);

// fold_ideal == intersection of predicted prime powers.
CheckResult verify_decomposition(const Arrangement& sigma, unsigned a,
                                 const GroebnerOptions& opt = {});

// Containment in a lattice prime happens exactly when nu >= n - a + 1,
// checked over every flat.
CheckResult verify_membership_bound(const Arrangement& sigma, unsigned a,
                                    const GroebnerOptions& opt = {});

// fold_ideal(sigma, a) : l == fold_ideal(sigma minus one copy of l, a - 1).
CheckResult verify_colon_claim(const Arrangement& sigma, unsigned a, size_t support_idx,
                               const GroebnerOptions& opt = {});

// J == saturate(J, m) intersected with m^a.
CheckResult verify_saturation_identity(const Arrangement& sigma, unsigned a,
                                       const GroebnerOptions& opt = {});

// fold_ideal(sigma, a) == sum over j of l^j * fold_ideal(sigma without l, a - j).
CheckResult verify_expansion_identity(const Arrangement& sigma, unsigned a, size_t support_idx,
                                      const GroebnerOptions& opt = {});

// fold_ideal(sigma, a)^e == fold_ideal(sigma replicated e times, e * a).
CheckResult verify_power_identity(const Arrangement& sigma, unsigned a, unsigned e,
                                  const GroebnerOptions& opt = {});

// Shared helper: equality with a generator witness on failure.
CheckResult equal_with_witness(const Ideal& lhs, const Ideal& rhs, const GroebnerOptions& opt);

}  // namespace afold
