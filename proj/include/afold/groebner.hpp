#pragma once

#include <optional>
#include <span>

#include "afold/ideal.hpp"

namespace afold {

// Remainder of f on division by basis (full tail reduction). The result has
// no monomial divisible by any leading term of a basis element.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord);

// Buchberger with the normal selection strategy and the Gebauer-Moeller pair
// update (chain + coprime criteria). Returns the reduced basis.
GroebnerBasis buchberger(const VarSet& vars, const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord, const GroebnerOptions& opt = {});

// Full check: every S-pair of gb reduces to zero. Quadratic; used by the
// engine self-check suite and tests.
bool verify_groebner(const VarSet& vars, const GroebnerBasis& gb);

bool membership(const Polynomial& f, const Ideal& I, const GroebnerOptions& opt = {});
bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& opt = {});

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, unsigned e);

Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& opt = {});
// Balanced pairwise fold; empty list is rejected (no ambient unit ideal).
Ideal intersect_many(std::vector<Ideal> ideals, const GroebnerOptions& opt = {});

// I : g. g must be nonzero.
Ideal quotient(const Ideal& I, const Polynomial& g, const GroebnerOptions& opt = {});
// I : J = intersection of I : g over generators g of J. J must be nonzero.
Ideal quotient_ideal(const Ideal& I, const Ideal& J, const GroebnerOptions& opt = {});

// I : J^infinity by iterated quotients; throws StructuralError if not stable
// within `cap` rounds.
Ideal saturate(const Ideal& I, const Ideal& J, const GroebnerOptions& opt = {}, unsigned cap = 64);

// Generators of I intersected with the subring excluding `front` variables.
// Result lives in the same ring; its generators avoid the front block.
Ideal eliminate(const Ideal& I, const std::vector<size_t>& front, const GroebnerOptions& opt = {});

// dim_Q of the degree-d slice of I. Generators must be homogeneous. No basis
// computation; independent linear algebra over the generators.
size_t graded_piece_dim(const Ideal& I, unsigned d);

// dim_Q (R/I)_d.
size_t quotient_piece_dim(const Ideal& I, unsigned d);

// Least degree of a nonzero element; nullopt for the zero ideal.
std::optional<unsigned> alpha_invariant(const Ideal& I, const GroebnerOptions& opt = {});

}  // namespace afold
