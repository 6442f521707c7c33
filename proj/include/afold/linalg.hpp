#pragma once

#include <vector>

#include "afold/polynomial.hpp"

namespace afold {

// Dense exact matrix over Q with row-reduction utilities. Desk scale only.
class QMatrix {
 public:
  QMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rational>(cols, Rational(0))) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& at(size_t r, size_t c) { return a_[r][c]; }
  const Rational& at(size_t r, size_t c) const { return a_[r][c]; }

  // In-place row echelon reduction; returns rank.
  size_t row_reduce();

  // Basis of the right nullspace (each vector has cols() entries).
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  size_t rows_, cols_;
  std::vector<std::vector<Rational>> a_;
};

// All monomials of total degree d in vars, descending degrevlex.
std::vector<Monomial> monomials_of_degree(const VarSet& vars, unsigned d);

// All monomials of bidegree (dx, dt), descending degrevlex.
std::vector<Monomial> monomials_of_bidegree(const VarSet& vars, unsigned dx, unsigned dt);

// Dimension of the span of the given polynomials (must share vars).
size_t span_dimension(const std::vector<Polynomial>& polys);

}  // namespace afold
