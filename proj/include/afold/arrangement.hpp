#pragma once

#include <string>
#include <vector>

#include "afold/ideal.hpp"

namespace afold {

// One form of the support with its multiplicity. Forms are canonically
// scaled: first nonzero coefficient is 1.
struct WeightedForm {
  Polynomial form;
  std::vector<Rational> coeffs;
  unsigned mult = 1;
};

// Element of the intersection lattice: the prime spanned by a sub-collection
// of forms, closed under span membership.
struct Flat {
  std::vector<size_t> form_idxs;  // support indices of all forms in the span
  unsigned rank = 0;              // dim of the span (codim of the flat)
  unsigned nu = 0;                // multiplicity: sum of mults over form_idxs
  std::vector<Polynomial> basis;  // reduced row echelon basis, as linear forms
};

struct Circuit {
  std::array<size_t, 3> idxs;             // support indices, increasing
  std::array<Rational, 3> coeffs;         // c0*l0 + c1*l1 + c2*l2 = 0, c0 = 1
};

struct DependentQuad {
  std::array<size_t, 4> idxs;                    // support indices, increasing
  std::vector<std::array<Rational, 4>> deps;     // nullspace basis, rref rows
};

// Multi-arrangement of hyperplanes through the origin: a list of linear forms
// with multiplicities. Proportional inputs are merged (with a warning); the
// support is deduplicated, canonically scaled and sorted.
class Arrangement {
 public:
  Arrangement(VarSet vars, std::vector<std::pair<Polynomial, unsigned>> forms,
              std::vector<std::string>* warnings = nullptr);

  // {"vars":["x","y","z"],"forms":[{"coeffs":[1,0,0],"mult":2},...]}
  // Coefficients may be integers or rational strings; mult defaults to 1.
  static Arrangement from_json(const std::string& text,
                               std::vector<std::string>* warnings = nullptr);
  std::string to_json() const;

  const VarSet& vars() const { return vars_; }
  const std::vector<WeightedForm>& support() const { return support_; }
  size_t s() const { return support_.size(); }
  unsigned n() const;  // total count with multiplicity
  unsigned rank() const { return rank_; }
  bool is_simple() const;

  // Full list of forms with each copy repeated; index into support stable.
  std::vector<Polynomial> forms_with_multiplicity() const;

  // Intersection lattice (all ranks >= 1), deduplicated, sorted by rank then
  // basis text. Computed once at construction.
  const std::vector<Flat>& flats() const { return flats_; }

  // Multiplicity nu along the span of the given linear forms: number of
  // support forms (counted with multiplicity) lying in the span.
  unsigned nu_of_span(const std::vector<Polynomial>& linear_forms) const;

  // All copies of every form scaled up: multiplicities times e.
  Arrangement replicated(unsigned e) const;
  // One copy of support form idx removed (deleted entirely at mult 1).
  Arrangement minus_one_copy(size_t idx) const;
  // All copies of support form idx removed.
  Arrangement minus_all_copies(size_t idx) const;

  // Every j-subset of the support spans rank j, for j <= min(s, #vars).
  bool meets_properly() const;

  // Dependent 3-subsets of the support (all three coefficients nonzero).
  std::vector<Circuit> three_circuits() const;
  // 4-subsets with a dependency; deps spans the full relation space.
  std::vector<DependentQuad> dependent_quadruples() const;

 private:
  VarSet vars_;
  std::vector<WeightedForm> support_;
  unsigned rank_ = 0;
  std::vector<Flat> flats_;
  void compute_flats();
};

Ideal flat_prime(const VarSet& vars, const Flat& f);

}  // namespace afold
