#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "afold/monomial.hpp"
#include "afold/numeric.hpp"
#include "afold/order.hpp"
#include "afold/varset.hpp"

namespace afold {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Multivariate polynomial over Q. Terms are kept in canonical form: nonzero
// coefficients, strictly descending degrevlex. All arithmetic preserves it.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(const VarSet& vars);
  static Polynomial constant(const VarSet& vars, const Rational& c);
  static Polynomial variable(const VarSet& vars, size_t i);
  // Normalizes: merges duplicate monomials, drops zeros, sorts.
  static Polynomial from_terms(const VarSet& vars, std::vector<Term> terms);
  static Polynomial term(const VarSet& vars, const Rational& c, const Monomial& m);

  // Syntax: "3*x^2*y - 1/2*z^3". No implicit multiplication; parentheses ok.
  static Polynomial parse(const VarSet& vars, const std::string& text);
  std::string format() const;

  const VarSet& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  // (x-degree, t-degree) if bihomogeneous, else nullopt. Zero -> nullopt.
  std::optional<std::pair<int, int>> bidegree() const;

  const Term& leading_term(const MonomialOrder& ord) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  // c * m * (*this)
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic(const MonomialOrder& ord) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Image under vars()[i] -> images[i]; images live in `target`.
  Polynomial substitute(const VarSet& target, const std::vector<Polynomial>& images) const;

  // Reinterprets over `target`; var_map[i] = index in target of vars()[i].
  Polynomial map_vars(const VarSet& target, const std::vector<int>& var_map) const;

  // Exact quotient *this / g, or nullopt if g does not divide exactly.
  std::optional<Polynomial> divided_exactly_by(const Polynomial& g) const;

  // Deterministic total order (degrevlex term sequences, then coefficients).
  static int canonical_compare(const Polynomial& a, const Polynomial& b);

 private:
  VarSet vars_;
  std::vector<Term> terms_;
};

// Shared by sum/product displays and reports: canonical sort + dedupe.
void canonical_sort_unique(std::vector<Polynomial>& polys);

}  // namespace afold
