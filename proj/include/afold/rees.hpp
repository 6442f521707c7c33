#pragma once

#include "afold/arrangement.hpp"
#include "afold/fold_ideal.hpp"

namespace afold {

// Blow-up algebra toolkit for the codimension-two products: a simple rank-three
// multiset of s lines taken a = s - 2 at a time. Generators f_{i,j} omit the
// pair (i, j); relation variables t_{i,j} follow the same indexing.

struct ReesSetup {
  Arrangement sigma;          // simple, rank three in three variables, s >= 4
  VarSet xt;                  // bigraded ring: x-block then t_{i,j} block
  std::vector<std::pair<size_t, size_t>> pairs;  // (i, j), i < j, in t order
  std::vector<Polynomial> f;  // f[k] = product of all forms except pair k
};

ReesSetup rees_setup(const Arrangement& sigma);

// Index of t_{i,j} within the t block (i < j after sorting).
size_t t_index(const ReesSetup& s, size_t i, size_t j);
Polynomial t_var(const ReesSetup& s, size_t i, size_t j);

// Defining ideal of the blow-up algebra: the graph ideal of t_{i,j} - w f_{i,j}
// with w eliminated, split into bihomogeneous parts.
Ideal rees_ideal(const ReesSetup& s, const GroebnerOptions& opt = {});

// Defining ideal of the special fiber: kernel of t_{i,j} -> f_{i,j}.
Ideal fiber_ideal(const ReesSetup& s, const GroebnerOptions& opt = {});

// Linear relations among the f_{i,j}: one per dependent triple of forms.
std::vector<Polynomial> family_circuit(const ReesSetup& s);

// Three bilinear relations for every triple a < b < c of form indices.
std::vector<Polynomial> family_bilinear(const ReesSetup& s);

// Two quadratic binomials for every quadruple of form indices.
std::vector<Polynomial> family_quadruple(const ReesSetup& s);

// Quadratic relations attached to each dependent quadruple: four local ones
// plus one for every outside index.
std::vector<Polynomial> family_dependent(const ReesSetup& s);

// All generators evaluate to zero under t_{i,j} -> w f_{i,j} (w marks the
// blow-up direction; pure t-polynomials vanish already under t -> f).
CheckResult verify_substitution_vanishing(const ReesSetup& s);

// rees == circuits + bilinear + quadruple binomials + dependent relations,
// i.e. the symmetric part plus the fiber candidate generate the whole kernel.
CheckResult verify_fiber_type(const ReesSetup& s, const GroebnerOptions& opt = {});

// fiber == circuits + quadruple binomials + dependent-quadruple relations.
CheckResult verify_fiber_presentation(const ReesSetup& s, const GroebnerOptions& opt = {});

// Minimal generator count of the product ideal via its singular points.
unsigned expected_generator_count(const Arrangement& sigma);
CheckResult verify_generator_count(const ReesSetup& s, const GroebnerOptions& opt = {});

// Bidegree histogram of an ideal's generators, as sorted ((dx, dt), count).
std::vector<std::pair<std::pair<int, int>, size_t>> bidegree_histogram(const Ideal& I);

// Minimal bigraded generating set of the blow-up ideal.
std::vector<Polynomial> rees_minimal_generators(const ReesSetup& s,
                                                const GroebnerOptions& opt = {});

// No minimal generator of the blow-up ideal carries x-degree two or more.
CheckResult verify_low_x_degrees(const ReesSetup& s, const GroebnerOptions& opt = {});

}  // namespace afold
