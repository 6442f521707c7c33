#include "afold/rees.hpp"

#include "afold/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace afold {

namespace {

int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

// Stamps ms and converts budget overruns into an inconclusive verdict.
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

// Greedy by ascending degree: a homogeneous generator is redundant exactly
// when the earlier ones already produce it.
std::vector<Polynomial> minimal_generators(const Ideal& I, const GroebnerOptions& opt) {
  std::vector<Polynomial> gens = I.gens();
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return Polynomial::canonical_compare(a, b) < 0;
  });
  std::vector<Polynomial> kept;
  for (const auto& g : gens) {
    if (!kept.empty() && membership(g, Ideal(I.vars(), kept), opt)) continue;
    kept.push_back(g);
  }
  return kept;
}

Polynomial into_xt(const ReesSetup& s, const Polynomial& p) {
  std::vector<int> up(p.vars().size());
  for (size_t i = 0; i < up.size(); ++i) up[i] = static_cast<int>(i);
  return p.map_vars(s.xt, up);
}

std::vector<Polynomial> split_bihomogeneous(const Polynomial& g, size_t x_count) {
  std::map<std::pair<int, int>, std::vector<Term>> buckets;
  for (const auto& t : g.terms()) {
    int dx = 0;
    for (size_t i = 0; i < x_count; ++i) dx += static_cast<int>(t.mono[i]);
    buckets[{dx, static_cast<int>(t.mono.degree()) - dx}].push_back(t);
  }
  std::vector<Polynomial> out;
  for (auto& [bd, terms] : buckets) out.push_back(Polynomial::from_terms(g.vars(), terms));
  return out;
}

}  // namespace

ReesSetup rees_setup(const Arrangement& sigma) {
  if (!sigma.is_simple()) throw StructuralError("blow-up setup needs a simple arrangement");
  if (sigma.vars().size() != 3 || sigma.rank() != 3)
    throw StructuralError("blow-up setup needs rank-three forms in three variables");
  const size_t s = sigma.support().size();
  if (s < 4) throw StructuralError("blow-up setup needs at least four forms");

  std::vector<std::string> x_names, t_names;
  for (size_t i = 0; i < sigma.vars().size(); ++i) x_names.push_back(sigma.vars().name(i));
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < s; ++i)
    for (size_t j = i + 1; j < s; ++j) {
      pairs.emplace_back(i, j);
      t_names.push_back("t" + std::to_string(i + 1) + std::to_string(j + 1));
    }

  ReesSetup setup{sigma, VarSet::bigraded(x_names, t_names), std::move(pairs), {}};
  Polynomial total = Polynomial::constant(setup.xt, 1);
  std::vector<Polynomial> lifted;
  for (const auto& wf : sigma.support()) {
    lifted.push_back(into_xt(setup, wf.form));
    total = total * lifted.back();
  }
  for (const auto& [i, j] : setup.pairs) {
    auto q = total.divided_exactly_by(lifted[i] * lifted[j]);
    if (!q) throw StructuralError("product division failed (internal)");
    setup.f.push_back(std::move(*q));
  }
  return setup;
}

size_t t_index(const ReesSetup& s, size_t i, size_t j) {
  if (i > j) std::swap(i, j);
  const size_t n = s.sigma.support().size();
  if (j >= n || i == j) throw StructuralError("t_index: bad pair");
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Polynomial t_var(const ReesSetup& s, size_t i, size_t j) {
  return Polynomial::variable(s.xt, s.xt.x_count() + t_index(s, i, j));
}

Ideal rees_ideal(const ReesSetup& s, const GroebnerOptions& opt) {
  const VarSet wxt = s.xt.prepended({s.xt.fresh_name("w_aux")});
  std::vector<int> up(s.xt.size());
  for (size_t i = 0; i < s.xt.size(); ++i) up[i] = static_cast<int>(i + 1);
  const Polynomial w = Polynomial::variable(wxt, 0);

  std::vector<Polynomial> graph;
  for (size_t k = 0; k < s.pairs.size(); ++k) {
    const auto& [i, j] = s.pairs[k];
    graph.push_back(t_var(s, i, j).map_vars(wxt, up) - w * s.f[k].map_vars(wxt, up));
  }
  Ideal lifted(wxt, std::move(graph));
  MonomialOrder elim = MonomialOrder::block_elim(wxt.size(), {0});
  const GroebnerBasis& gb = lifted.groebner(elim, opt);

  std::vector<int> down(wxt.size());
  down[0] = -1;
  for (size_t i = 0; i < s.xt.size(); ++i) down[i + 1] = static_cast<int>(i);
  std::vector<Polynomial> kept;
  for (const auto& e : gb.elems) {
    bool uses_w = false;
    for (const auto& t : e.terms())
      if (t.mono[0]) {
        uses_w = true;
        break;
      }
    if (!uses_w) kept.push_back(e.map_vars(s.xt, down));
  }

  std::vector<Polynomial> split;
  for (const auto& g : kept)
    for (auto& part : split_bihomogeneous(g, s.xt.x_count())) split.push_back(std::move(part));
  Ideal result(s.xt, split);

  if (split.size() == kept.size()) {
    // nothing actually split, so the filtered reduced basis carries over
    GroebnerBasis seeded;
    seeded.order = MonomialOrder::degrevlex();
    seeded.elems = std::move(kept);
    seeded.stats = gb.stats;
    result.seed_groebner(std::move(seeded));
  }
  return result;
}

Ideal fiber_ideal(const ReesSetup& s, const GroebnerOptions& opt) {
  std::vector<Polynomial> graph;
  for (size_t k = 0; k < s.pairs.size(); ++k) {
    const auto& [i, j] = s.pairs[k];
    graph.push_back(t_var(s, i, j) - s.f[k]);
  }
  std::vector<size_t> front(s.xt.x_count());
  for (size_t i = 0; i < front.size(); ++i) front[i] = i;
  return eliminate(Ideal(s.xt, std::move(graph)), front, opt);
}

std::vector<Polynomial> family_circuit(const ReesSetup& s) {
  std::vector<Polynomial> out;
  for (const auto& c : s.sigma.three_circuits()) {
    Polynomial L = Polynomial::zero(s.xt);
    for (int m = 0; m < 3; ++m) {
      const size_t a = c.idxs[(m + 1) % 3], b = c.idxs[(m + 2) % 3];
      L = L + t_var(s, a, b).scaled(c.coeffs[m]);
    }
    out.push_back(std::move(L));
  }
  return out;
}

std::vector<Polynomial> family_bilinear(const ReesSetup& s) {
  const size_t n = s.sigma.support().size();
  std::vector<Polynomial> lifted;
  for (const auto& wf : s.sigma.support()) lifted.push_back(into_xt(s, wf.form));
  std::vector<Polynomial> out;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c) {
        out.push_back(lifted[a] * t_var(s, a, b) - lifted[c] * t_var(s, b, c));
        out.push_back(lifted[a] * t_var(s, a, c) - lifted[b] * t_var(s, b, c));
        out.push_back(lifted[b] * t_var(s, a, b) - lifted[c] * t_var(s, a, c));
      }
  return out;
}

std::vector<Polynomial> family_quadruple(const ReesSetup& s) {
  const size_t n = s.sigma.support().size();
  std::vector<Polynomial> out;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        for (size_t d = c + 1; d < n; ++d) {
          const Polynomial ab_cd = t_var(s, a, b) * t_var(s, c, d);
          out.push_back(ab_cd - t_var(s, a, c) * t_var(s, b, d));
          out.push_back(ab_cd - t_var(s, a, d) * t_var(s, b, c));
        }
  return out;
}

std::vector<Polynomial> family_dependent(const ReesSetup& s) {
  const size_t n = s.sigma.support().size();
  std::vector<Polynomial> out;
  for (const auto& quad : s.sigma.dependent_quadruples()) {
    const auto& q = quad.idxs;  // ascending; local slots 1..4 below
    auto t = [&](int u, int v) { return t_var(s, q[u - 1], q[v - 1]); };
    for (const auto& dep : quad.deps) {
      const Rational& d1 = dep[0];
      const Rational& d2 = dep[1];
      const Rational& d3 = dep[2];
      const Rational& d4 = dep[3];
      out.push_back(t(1, 2) * t(3, 4).scaled(d1) + t(1, 3) * t(1, 4).scaled(d2) +
                    t(1, 2) * t(1, 4).scaled(d3) + t(1, 2) * t(1, 3).scaled(d4));
      out.push_back(t(2, 3) * t(2, 4).scaled(d1) + t(1, 2) * t(3, 4).scaled(d2) +
                    t(1, 2) * t(2, 4).scaled(d3) + t(1, 2) * t(2, 3).scaled(d4));
      out.push_back(t(2, 3) * t(3, 4).scaled(d1) + t(1, 3) * t(3, 4).scaled(d2) +
                    t(1, 2) * t(3, 4).scaled(d3) + t(1, 3) * t(2, 3).scaled(d4));
      out.push_back(t(2, 4) * t(3, 4).scaled(d1) + t(1, 4) * t(3, 4).scaled(d2) +
                    t(1, 4) * t(2, 4).scaled(d3) + t(1, 2) * t(3, 4).scaled(d4));
      for (size_t k = 0; k < n; ++k) {
        if (k == q[0] || k == q[1] || k == q[2] || k == q[3]) continue;
        out.push_back(t_var(s, q[1], q[2]) * t_var(s, q[3], k).scaled(d1) +
                      t_var(s, q[0], q[2]) * t_var(s, q[3], k).scaled(d2) +
                      t_var(s, q[0], q[1]) * t_var(s, q[3], k).scaled(d3) +
                      t_var(s, q[0], q[1]) * t_var(s, q[2], k).scaled(d4));
      }
    }
  }
  return out;
}

CheckResult verify_substitution_vanishing(const ReesSetup& s) {
  return run_timed([&] {
    CheckResult r;
    std::vector<Polynomial> images;
    for (size_t i = 0; i < s.xt.x_count(); ++i) images.push_back(Polynomial::variable(s.xt, i));
    for (const auto& fk : s.f) images.push_back(fk);

    const std::vector<std::pair<const char*, std::vector<Polynomial>>> families = {
        {"circuit", family_circuit(s)},
        {"bilinear", family_bilinear(s)},
        {"quadruple", family_quadruple(s)},
        {"dependent", family_dependent(s)}};
    for (const auto& [name, fam] : families)
      for (const auto& g : fam)
        if (!g.substitute(s.xt, images).is_zero()) {
          r.verdict = Verdict::False;
          r.detail = std::string(name) + " relation fails to vanish: " + g.format();
          return r;
        }
    r.verdict = Verdict::True;
    return r;
  });
}

CheckResult verify_fiber_type(const ReesSetup& s, const GroebnerOptions& opt) {
  return run_timed([&] {
    std::vector<Polynomial> gens = family_circuit(s);
    for (auto& g : family_bilinear(s)) gens.push_back(std::move(g));
    for (auto& g : family_quadruple(s)) gens.push_back(std::move(g));
    for (auto& g : family_dependent(s)) gens.push_back(std::move(g));
    return equal_with_witness(rees_ideal(s, opt), Ideal(s.xt, std::move(gens)), opt);
  });
}

CheckResult verify_fiber_presentation(const ReesSetup& s, const GroebnerOptions& opt) {
  return run_timed([&] {
    std::vector<Polynomial> gens = family_circuit(s);
    for (auto& g : family_quadruple(s)) gens.push_back(std::move(g));
    for (auto& g : family_dependent(s)) gens.push_back(std::move(g));
    return equal_with_witness(fiber_ideal(s, opt), Ideal(s.xt, std::move(gens)), opt);
  });
}

unsigned expected_generator_count(const Arrangement& sigma) {
  const size_t s = sigma.support().size();
  long mu = binomial_l(static_cast<long>(s), 2);
  for (const auto& flat : sigma.flats())
    if (flat.rank == 2) mu -= binomial_l(static_cast<long>(flat.nu) - 1, 2);
  return static_cast<unsigned>(mu);
}

CheckResult verify_generator_count(const ReesSetup& s, const GroebnerOptions& opt) {
  (void)opt;
  return run_timed([&] {
    CheckResult r;
    const unsigned expected = expected_generator_count(s.sigma);
    const size_t actual = span_dimension(s.f);
    const std::vector<Polynomial> circuits = family_circuit(s);
    const size_t relations = circuits.empty() ? 0 : span_dimension(circuits);
    if (actual != expected || relations != s.pairs.size() - expected) {
      r.verdict = Verdict::False;
      r.detail = "independent products " + std::to_string(actual) + ", circuit span " +
                 std::to_string(relations) + ", expected " + std::to_string(expected);
      return r;
    }
    r.verdict = Verdict::True;
    return r;
  });
}

std::vector<std::pair<std::pair<int, int>, size_t>> bidegree_histogram(const Ideal& I) {
  std::map<std::pair<int, int>, size_t> hist;
  for (const auto& g : I.gens()) {
    auto bd = g.bidegree();
    if (!bd) throw StructuralError("bidegree histogram needs bihomogeneous generators");
    ++hist[*bd];
  }
  return {hist.begin(), hist.end()};
}

std::vector<Polynomial> rees_minimal_generators(const ReesSetup& s, const GroebnerOptions& opt) {
  return minimal_generators(rees_ideal(s, opt), opt);
}

CheckResult verify_low_x_degrees(const ReesSetup& s, const GroebnerOptions& opt) {
  return run_timed([&] {
    CheckResult r;
    for (const auto& g : rees_minimal_generators(s, opt)) {
      auto bd = g.bidegree();
      if (!bd || bd->first >= 2) {
        r.verdict = Verdict::False;
        r.detail = "minimal generator with high x-degree: " + g.format();
        return r;
      }
    }
    r.verdict = Verdict::True;
    return r;
  });
}

}  // namespace afold
