#include "afold/star.hpp"

#include <chrono>

#include "afold/linalg.hpp"

namespace afold {

namespace {

int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

template <typename F>
CheckResult run_timed(F&& body) {
  CheckResult r;
  const int64_t t0 = now_ms();
  try {
    r = body();
  } catch (const BudgetExceeded& e) {
    r.verdict = Verdict::Inconclusive;
    r.detail = "budget exceeded after " + std::to_string(e.stats.pairs_generated) + " pairs";
  }
  r.ms = now_ms() - t0;
  return r;
}

// N = projective dimension, one less than the variable count
unsigned projective_dim(const Arrangement& sigma) {
  return static_cast<unsigned>(sigma.vars().size()) - 1;
}

void star_guard(const Arrangement& sigma, unsigned c) {
  if (!sigma.is_simple()) throw StructuralError("star configuration needs distinct hyperplanes");
  const unsigned N = projective_dim(sigma);
  if (sigma.support().size() < N + 1)
    throw StructuralError("star configuration needs at least N + 1 hyperplanes");
  if (c < 1 || c > N) throw StructuralError("codimension out of range");
  if (!sigma.meets_properly())
    throw StructuralError("hyperplanes fail to meet properly");
}

// next c-subset of {0..s-1} in lexicographic order; false when exhausted
bool next_subset(std::vector<size_t>& idx, size_t s) {
  const size_t c = idx.size();
  size_t i = c;
  while (i-- > 0) {
    if (idx[i] + (c - i) < s) {
      ++idx[i];
      for (size_t j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Ideal subset_prime(const Arrangement& sigma, const std::vector<size_t>& idx) {
  std::vector<Polynomial> gens;
  for (size_t i : idx) gens.push_back(sigma.support()[i].form);
  return Ideal(sigma.vars(), std::move(gens));
}

std::vector<Ideal> subset_prime_powers(const Arrangement& sigma, unsigned c, unsigned m) {
  std::vector<Ideal> parts;
  std::vector<size_t> idx(c);
  for (size_t i = 0; i < c; ++i) idx[i] = i;
  do {
    Ideal p = subset_prime(sigma, idx);
    parts.push_back(m == 1 ? std::move(p) : ideal_power(p, m));
  } while (next_subset(idx, sigma.support().size()));
  return parts;
}

// power of the irrelevant maximal ideal: all monomials of the given degree
Ideal maximal_power(const VarSet& vars, unsigned e) {
  if (e == 0) return Ideal::unit(vars);
  std::vector<Polynomial> gens;
  for (const auto& mono : monomials_of_degree(vars, e))
    gens.push_back(Polynomial::term(vars, 1, mono));
  return Ideal(vars, std::move(gens));
}

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

Ideal star_ideal(const Arrangement& sigma, unsigned c, const GroebnerOptions& opt) {
  star_guard(sigma, c);
  return intersect_many(subset_prime_powers(sigma, c, 1), opt);
}

Ideal symbolic_power(const Arrangement& sigma, unsigned c, unsigned m,
                     const GroebnerOptions& opt) {
  star_guard(sigma, c);
  if (m < 1) throw StructuralError("symbolic power needs a positive exponent");
  return intersect_many(subset_prime_powers(sigma, c, m), opt);
}

long alpha_formula(long s, long c, long m) {
  if (c < 1 || s < c || m < 1) throw StructuralError("alpha formula out of range");
  const long q = (m - 1) / c;
  const long r = m - q * c;
  return (q + 1) * s - c + r;
}

CheckResult verify_alpha(const Arrangement& sigma, unsigned c, unsigned m,
                         const GroebnerOptions& opt) {
  return run_timed([&] {
    CheckResult r;
    const long expected =
        alpha_formula(static_cast<long>(sigma.support().size()), c, m);
    const auto actual = alpha_invariant(symbolic_power(sigma, c, m, opt), opt);
    if (!actual || static_cast<long>(*actual) != expected) {
      r.verdict = Verdict::False;
      r.detail = "least degree " + (actual ? std::to_string(*actual) : std::string("none")) +
                 ", formula " + std::to_string(expected);
      return r;
    }
    r.verdict = Verdict::True;
    return r;
  });
}

CheckResult verify_generation_degree(const Arrangement& sigma, unsigned c,
                                     const GroebnerOptions& opt) {
  return run_timed([&] {
    CheckResult r;
    const Ideal I = star_ideal(sigma, c, opt);
    const unsigned d = static_cast<unsigned>(sigma.support().size()) - c + 1;
    const auto a = alpha_invariant(I, opt);
    if (!a || *a != d) {
      r.verdict = Verdict::False;
      r.detail = "least degree " + (a ? std::to_string(*a) : std::string("none")) +
                 ", expected " + std::to_string(d);
      return r;
    }
    // degree-d elements of the reduced basis span the whole degree-d piece
    std::vector<Polynomial> slice;
    for (const auto& g : I.groebner(MonomialOrder::degrevlex(), opt).elems)
      if (g.degree() == static_cast<int>(d)) slice.push_back(g);
    return equal_with_witness(I, Ideal(I.vars(), std::move(slice)), opt);
  });
}

CheckResult power_decomposition_check(const Arrangement& sigma, unsigned c, unsigned m,
                                      const GroebnerOptions& opt) {
  return run_timed([&] {
    star_guard(sigma, c);
    if (m < 1) throw StructuralError("power decomposition needs a positive exponent");
    const unsigned N = projective_dim(sigma);
    const unsigned s = static_cast<unsigned>(sigma.support().size());

    const Ideal lhs = ideal_power(star_ideal(sigma, c, opt), m);
    std::vector<Ideal> parts;
    for (unsigned j = c; j <= N; ++j) parts.push_back(symbolic_power(sigma, j, (j - c + 1) * m, opt));
    parts.push_back(maximal_power(sigma.vars(), (s - c + 1) * m));
    return equal_with_witness(lhs, intersect_many(std::move(parts), opt), opt);
  });
}

CheckResult containment_check(const Arrangement& sigma, unsigned c, unsigned m, int which,
                              const GroebnerOptions& opt) {
  return run_timed([&] {
    star_guard(sigma, c);
    if (m < 1) throw StructuralError("containment check needs a positive exponent");
    if (which < 1 || which > 3) throw StructuralError("containment check id out of range");

    const unsigned sym_exp = which == 1 ? m * c : m * c - c + 1;
    const unsigned max_exp = which == 1   ? m * (c - 1)
                             : which == 2 ? 0
                                          : (m - 1) * (c - 1);

    const Ideal lhs = symbolic_power(sigma, c, sym_exp, opt);
    Ideal rhs = ideal_power(star_ideal(sigma, c, opt), m);
    if (max_exp > 0) rhs = ideal_product(maximal_power(sigma.vars(), max_exp), rhs);

    CheckResult r;
    for (const auto& g : lhs.groebner(MonomialOrder::degrevlex(), opt).elems)
      if (!membership(g, rhs, opt)) {
        r.verdict = Verdict::False;
        r.detail = "symbolic element outside the target: " + g.format();
        return r;
      }
    r.verdict = Verdict::True;
    return r;
  });
}

CheckResult verify_symbolic_product(const Arrangement& sigma, unsigned c, unsigned m1,
                                    unsigned m2, const GroebnerOptions& opt) {
  return run_timed([&] {
    CheckResult r;
    const Ideal a = symbolic_power(sigma, c, m1, opt);
    const Ideal b = symbolic_power(sigma, c, m2, opt);
    const Ideal sum = symbolic_power(sigma, c, m1 + m2, opt);
    for (const auto& ga : a.gens())
      for (const auto& gb : b.gens())
        if (!membership(ga * gb, sum, opt)) {
          r.verdict = Verdict::False;
          r.detail = "product escapes the expected symbolic power: " + (ga * gb).format();
          return r;
        }
    r.verdict = Verdict::True;
    return r;
  });
}

std::vector<SweepRow> inequality_sweep(unsigned s, unsigned c, unsigned N, unsigned t_max,
                                       unsigned m_max, int which) {
  if (c < 1 || c > N || N >= s) throw StructuralError("sweep parameters out of range");
  if (which < 4 || which > 6) throw StructuralError("sweep check id out of range");

  std::vector<SweepRow> rows;
  auto alpha = [&](unsigned m) { return alpha_formula(s, c, m); };
  for (unsigned t = 1; t <= t_max; ++t) {
    const Rational lhs = ratio(alpha(t), t);
    if (which == 6) {
      const Rational rhs = ratio(alpha(1) + N - 1, N);
      rows.push_back({N, s, c, t, 0, which, lhs >= rhs, lhs, rhs, 0});
      continue;
    }
    for (unsigned m = 1; m <= m_max; ++m) {
      const long shift = which == 4 ? c - 1 : N - 1;
      const Rational rhs = ratio(alpha(m) + shift, m + shift);
      rows.push_back({N, s, c, t, m, which, lhs >= rhs, lhs, rhs, 0});
    }
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "N,s,c,t,m,check,holds,lhs,rhs,ms\n";
  for (const auto& r : rows) {
    out += std::to_string(r.N) + "," + std::to_string(r.s) + "," + std::to_string(r.c) + "," +
           std::to_string(r.t) + "," + std::to_string(r.m) + "," + std::to_string(r.check) + "," +
           (r.holds ? "true" : "false") + "," + r.lhs.get_str() + "," + r.rhs.get_str() + "," +
           std::to_string(r.ms) + "\n";
  }
  return out;
}

}  // namespace afold
