#pragma once

#include "afold/fold_ideal.hpp"

namespace afold {

// Star configurations: the codimension-c strata cut out by a collection of
// s >= N+1 distinct, properly meeting hyperplanes in projective N-space.
// All entry points validate the configuration and throw StructuralError
// when the arrangement or the codimension is out of range.

// Intersection of the ideals of all c-subsets of the forms.
Ideal star_ideal(const Arrangement& sigma, unsigned c, const GroebnerOptions& opt = {});

// Intersection of the m-th powers of the same subset ideals.
Ideal symbolic_power(const Arrangement& sigma, unsigned c, unsigned m,
                     const GroebnerOptions& opt = {});

// Least degree of the m-th symbolic power: (q+1)s - c + r where m = qc + r,
// 1 <= r <= c.
long alpha_formula(long s, long c, long m);

// Engine least degree agrees with the closed formula.
CheckResult verify_alpha(const Arrangement& sigma, unsigned c, unsigned m,
                         const GroebnerOptions& opt = {});

// The star ideal is generated exactly in degree s - c + 1.
CheckResult verify_generation_degree(const Arrangement& sigma, unsigned c,
                                     const GroebnerOptions& opt = {});

// Ordinary power as an intersection: for N-space and 1 <= c <= N,
// I^m equals the symbolic powers of the deeper stars intersected with a
// power of the irrelevant maximal ideal.
CheckResult power_decomposition_check(const Arrangement& sigma, unsigned c, unsigned m,
                                      const GroebnerOptions& opt = {});

// which = 1: the (mc)-th symbolic power lies in M^(m(c-1)) * I^m
// which = 2: the (mc-c+1)-th symbolic power lies in I^m
// which = 3: the (mc-c+1)-th symbolic power lies in M^((m-1)(c-1)) * I^m
CheckResult containment_check(const Arrangement& sigma, unsigned c, unsigned m, int which,
                              const GroebnerOptions& opt = {});

// Products of symbolic powers land in the symbolic power of the exponent sum.
CheckResult verify_symbolic_product(const Arrangement& sigma, unsigned c, unsigned m1,
                                    unsigned m2, const GroebnerOptions& opt = {});

// One evaluated instance of an alpha-invariant inequality (checks 4-6);
// m stays 0 for check 6, whose right side does not depend on it.
struct SweepRow {
  unsigned N = 0, s = 0, c = 0;
  unsigned t = 0, m = 0;
  int check = 0;
  bool holds = false;
  Rational lhs, rhs;
  int64_t ms = 0;
};

// which = 4: alpha(t)/t >= (alpha(m) + c - 1) / (m + c - 1)
// which = 5: alpha(t)/t >= (alpha(m) + N - 1) / (m + N - 1)
// which = 6: alpha(t)/t >= (alpha(1) + N - 1) / N
// Pure rational arithmetic through alpha_formula; no ideals are built.
std::vector<SweepRow> inequality_sweep(unsigned s, unsigned c, unsigned N, unsigned t_max,
                                       unsigned m_max, int which);

// Header plus one line per row: N,s,c,t,m,check,holds,lhs,rhs,ms.
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace afold
