#include "afold/groebner.hpp"

#include <algorithm>
#include <chrono>

#include "afold/linalg.hpp"

namespace afold {

namespace {

using Clock = std::chrono::steady_clock;

int64_t ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Budget {
  Clock::time_point start = Clock::now();
  int64_t max_ms = 0;
  uint64_t max_pairs = 0;
  uint64_t pairs = 0;
  uint64_t ticks = 0;
  GroebnerStats* stats = nullptr;

  void on_pair() {
    ++pairs;
    if (max_pairs && pairs > max_pairs) fail("S-pair budget exceeded");
    check_time();
  }
  void on_reduction_step() {
    if ((++ticks & 1023) == 0) check_time();
  }
  void check_time() {
    if (max_ms > 0 && ms_since(start) >= max_ms) fail("time budget exceeded");
  }
  void fail(const char* what) {
    GroebnerStats s = stats ? *stats : GroebnerStats{};
    s.ms = ms_since(start);
    throw BudgetExceeded(what, s);
  }
};

// Engine representation: terms strictly descending under the working order.
struct EPoly {
  std::vector<Term> t;
  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().mono; }
  const Rational& lc() const { return t.front().coeff; }
};

EPoly to_engine(const Polynomial& p, const MonomialOrder& ord) {
  EPoly e;
  e.t = p.terms();
  if (ord.kind() != MonomialOrder::Kind::Degrevlex) {
    std::sort(e.t.begin(), e.t.end(),
              [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  }
  return e;
}

Polynomial from_engine(const VarSet& vars, EPoly e) {
  return Polynomial::from_terms(vars, std::move(e.t));
}

// out = h - c * m * g, with h viewed from offset `start`.
void sub_mul(const EPoly& h, size_t start, const Rational& c, const Monomial& m, const EPoly& g,
             const MonomialOrder& ord, EPoly& out) {
  out.t.clear();
  out.t.reserve(h.t.size() - start + g.t.size());
  size_t i = start, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < h.t.size() && j < g.t.size()) {
    if (!have_gm) {
      gm = g.t[j].mono * m;
      have_gm = true;
    }
    int cmp = ord.compare(h.t[i].mono, gm);
    if (cmp > 0) {
      out.t.push_back(h.t[i++]);
    } else if (cmp < 0) {
      out.t.push_back({gm, -(c * g.t[j].coeff)});
      ++j;
      have_gm = false;
    } else {
      Rational s = h.t[i].coeff - c * g.t[j].coeff;
      if (s != 0) out.t.push_back({h.t[i].mono, std::move(s)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  for (; i < h.t.size(); ++i) out.t.push_back(h.t[i]);
  for (; j < g.t.size(); ++j) out.t.push_back({g.t[j].mono * m, -(c * g.t[j].coeff)});
}

// Full normal form of f modulo the polynomials selected by `use`.
EPoly nf_engine(EPoly f, const std::vector<EPoly>& G, const std::vector<Monomial>& lts,
                const std::vector<char>& use, const MonomialOrder& ord, Budget* bud) {
  EPoly done;
  size_t start = 0;
  EPoly next;
  while (start < f.t.size()) {
    const Term& lt = f.t[start];
    size_t red = G.size();
    for (size_t k = 0; k < G.size(); ++k) {
      if (use[k] && lts[k].divides(lt.mono)) {
        red = k;
        break;
      }
    }
    if (red == G.size()) {
      done.t.push_back(lt);
      ++start;
      continue;
    }
    if (bud) bud->on_reduction_step();
    Rational c = lt.coeff / G[red].lc();
    Monomial m = lt.mono.divided_by(lts[red]);
    sub_mul(f, start, c, m, G[red], ord, next);
    f.t.swap(next.t);
    start = 0;
  }
  return done;
}

// S-polynomial, normalized so both leading terms cancel.
EPoly spoly(const EPoly& f, const EPoly& g, const MonomialOrder& ord) {
  Monomial l = Monomial::lcm(f.lm(), g.lm());
  Monomial mf = l.divided_by(f.lm());
  Monomial mg = l.divided_by(g.lm());
  EPoly h;
  h.t.reserve(f.t.size());
  for (const auto& t : f.t) h.t.push_back({t.mono * mf, t.coeff});
  EPoly out;
  sub_mul(h, 0, f.lc() / g.lc(), mg, g, ord, out);
  return out;
}

void make_monic(EPoly& p) {
  if (p.zero() || p.lc() == 1) return;
  Rational inv = Rational(1) / p.lc();
  for (auto& t : p.t) t.coeff *= inv;
}

struct SPair {
  size_t i, j;
  Monomial lcm;
};

class Engine {
 public:
  Engine(const MonomialOrder& ord, Budget* bud) : ord_(ord), bud_(bud) {}

  // Gebauer-Moeller update: prunes new and old pairs, then installs h.
  void add(EPoly h) {
    size_t n = basis.size();
    const Monomial& ltn = h.lm();

    struct Cand {
      size_t i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cand;
    cand.reserve(n);
    for (size_t i = 0; i < n; ++i)
      cand.push_back({i, Monomial::lcm(lts[i], ltn), Monomial::coprime(lts[i], ltn), true});

    // strict-divisor pruning among the new pairs
    std::sort(cand.begin(), cand.end(), [&](const Cand& a, const Cand& b) {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      int c = ord_.compare(a.lcm, b.lcm);
      if (c) return c > 0 ? false : true;
      return a.i < b.i;
    });
    for (size_t a = 0; a < cand.size(); ++a) {
      if (!cand[a].keep) continue;
      for (size_t b = 0; b < a; ++b) {
        if (!cand[b].keep) continue;
        if (cand[b].lcm.degree() < cand[a].lcm.degree() && cand[b].lcm.divides(cand[a].lcm)) {
          cand[a].keep = false;
          break;
        }
      }
    }
    // equal-lcm groups: a coprime member kills the group, else keep one
    for (size_t a = 0; a < cand.size();) {
      size_t b = a;
      while (b < cand.size() && cand[b].lcm == cand[a].lcm) ++b;
      bool any_coprime = false;
      for (size_t k = a; k < b; ++k)
        if (cand[k].keep && cand[k].coprime) any_coprime = true;
      bool kept_one = false;
      for (size_t k = a; k < b; ++k) {
        if (!cand[k].keep) continue;
        if (any_coprime || kept_one)
          cand[k].keep = false;
        else
          kept_one = true;
      }
      a = b;
    }
    // coprime criterion on survivors
    for (auto& c : cand)
      if (c.keep && c.coprime) c.keep = false;

    // chain criterion on old pairs
    std::erase_if(pairs, [&](const SPair& p) {
      if (!ltn.divides(p.lcm)) return false;
      if (Monomial::lcm(lts[p.i], ltn) == p.lcm) return false;
      if (Monomial::lcm(lts[p.j], ltn) == p.lcm) return false;
      return true;
    });

    for (auto& c : cand) {
      if (c.keep) {
        pairs.push_back({c.i, n, c.lcm});
        ++stats.pairs_generated;
      }
    }
    lts.push_back(ltn);
    use.push_back(1);
    basis.push_back(std::move(h));
  }

  // normal selection: smallest lcm under the order
  SPair pop_pair() {
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      int c = ord_.compare(pairs[k].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                               (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
        best = k;
    }
    SPair p = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    return p;
  }

  void run() {
    while (!pairs.empty()) {
      if (bud_) bud_->on_pair();
      SPair p = pop_pair();
      ++stats.pairs_reduced;
      EPoly s = spoly(basis[p.i], basis[p.j], ord_);
      EPoly r = nf_engine(std::move(s), basis, lts, use, ord_, bud_);
      if (r.zero()) {
        ++stats.zero_reductions;
      } else {
        make_monic(r);
        add(std::move(r));
      }
    }
  }

  // minimal leading terms, tails fully reduced, monic, ascending LTs
  std::vector<EPoly> interreduce() {
    std::vector<size_t> idx(basis.size());
    for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return ord_.compare(lts[a], lts[b]) < 0; });
    std::fill(use.begin(), use.end(), 0);
    std::vector<size_t> kept;
    for (size_t k : idx) {
      bool redundant = false;
      for (size_t q : kept) {
        if (lts[q].divides(lts[k])) {
          redundant = true;
          break;
        }
      }
      if (!redundant) {
        kept.push_back(k);
        use[k] = 1;
      }
    }
    // tail-reduce in place so later elements see the reduced reducers
    for (size_t k : kept) {
      use[k] = 0;
      EPoly r = nf_engine(std::move(basis[k]), basis, lts, use, ord_, bud_);
      make_monic(r);
      basis[k] = std::move(r);
      use[k] = 1;
    }
    std::vector<EPoly> out;
    out.reserve(kept.size());
    for (size_t k : kept) out.push_back(std::move(basis[k]));
    return out;
  }

  std::vector<EPoly> basis;
  std::vector<Monomial> lts;
  std::vector<char> use;
  std::vector<SPair> pairs;
  GroebnerStats stats;

 private:
  const MonomialOrder& ord_;
  Budget* bud_;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrder& ord) {
  std::vector<EPoly> G;
  std::vector<Monomial> lts;
  std::vector<char> use;
  for (const auto& g : basis) {
    if (g.is_zero()) throw StructuralError("normal_form: zero divisor polynomial");
    EPoly e = to_engine(g, ord);
    lts.push_back(e.lm());
    use.push_back(1);
    G.push_back(std::move(e));
  }
  EPoly r = nf_engine(to_engine(f, ord), G, lts, use, ord, nullptr);
  return from_engine(f.vars(), std::move(r));
}

GroebnerBasis buchberger(const VarSet& vars, const std::vector<Polynomial>& gens,
                         const MonomialOrder& ord, const GroebnerOptions& opt) {
  Budget bud;
  bud.max_ms = opt.max_ms;
  bud.max_pairs = opt.max_pairs;
  Engine eng(ord, &bud);
  bud.stats = &eng.stats;

  std::vector<EPoly> inputs;
  for (const auto& g : gens) {
    if (!g.is_zero()) inputs.push_back(to_engine(g, ord));
  }
  // feeding smaller leading terms first keeps early reducers small
  std::sort(inputs.begin(), inputs.end(),
            [&](const EPoly& a, const EPoly& b) { return ord.compare(a.lm(), b.lm()) < 0; });
  for (auto& e : inputs) {
    EPoly r = nf_engine(std::move(e), eng.basis, eng.lts, eng.use, ord, &bud);
    if (!r.zero()) {
      make_monic(r);
      eng.add(std::move(r));
    }
  }
  eng.run();
  std::vector<EPoly> red = eng.interreduce();

  GroebnerBasis gb;
  gb.order = ord;
  for (auto& e : red) gb.elems.push_back(from_engine(vars, std::move(e)));
  gb.stats = eng.stats;
  gb.stats.basis_size = gb.elems.size();
  gb.stats.ms = ms_since(bud.start);
  if (opt.sink) {
    opt.sink->pairs_generated += gb.stats.pairs_generated;
    opt.sink->pairs_reduced += gb.stats.pairs_reduced;
    opt.sink->zero_reductions += gb.stats.zero_reductions;
    opt.sink->basis_size = std::max(opt.sink->basis_size, gb.stats.basis_size);
    opt.sink->ms += gb.stats.ms;
  }
  return gb;
}

bool verify_groebner(const VarSet& vars, const GroebnerBasis& gb) {
  (void)vars;
  const auto& G = gb.elems;
  std::vector<EPoly> eng;
  std::vector<Monomial> lts;
  std::vector<char> use;
  for (const auto& g : G) {
    EPoly e = to_engine(g, gb.order);
    lts.push_back(e.lm());
    use.push_back(1);
    eng.push_back(std::move(e));
  }
  for (size_t i = 0; i < eng.size(); ++i) {
    for (size_t j = i + 1; j < eng.size(); ++j) {
      EPoly s = spoly(eng[i], eng[j], gb.order);
      EPoly r = nf_engine(std::move(s), eng, lts, use, gb.order, nullptr);
      if (!r.zero()) return false;
    }
  }
  return true;
}

bool membership(const Polynomial& f, const Ideal& I, const GroebnerOptions& opt) {
  if (f.vars() != I.vars()) throw StructuralError("membership: ring mismatch");
  if (I.is_zero_ideal()) return f.is_zero();
  if (f.is_zero()) return true;
  const GroebnerBasis& gb = I.groebner(MonomialOrder::degrevlex(), opt);
  return normal_form(f, gb.elems, gb.order).is_zero();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const GroebnerOptions& opt) {
  if (a.vars() != b.vars()) throw StructuralError("ideal_equal: ring mismatch");
  if (a.is_zero_ideal() || b.is_zero_ideal()) return a.is_zero_ideal() == b.is_zero_ideal();
  const auto& ga = a.groebner(MonomialOrder::degrevlex(), opt);
  const auto& gb = b.groebner(MonomialOrder::degrevlex(), opt);
  return ga.elems == gb.elems;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (a.vars() != b.vars()) throw StructuralError("ideal_sum: ring mismatch");
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal(a.vars(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (a.vars() != b.vars()) throw StructuralError("ideal_product: ring mismatch");
  std::vector<Polynomial> gens;
  for (const auto& f : a.gens())
    for (const auto& g : b.gens()) gens.push_back(f * g);
  return Ideal(a.vars(), std::move(gens));
}

Ideal ideal_power(const Ideal& a, unsigned e) {
  if (e == 0) return Ideal::unit(a.vars());
  if (a.is_zero_ideal()) return Ideal::zero(a.vars());
  // products over multisets of generator indices
  std::vector<Polynomial> gens;
  std::vector<size_t> pick(e, 0);
  const auto& g = a.gens();
  while (true) {
    Polynomial p = g[pick[0]];
    for (size_t k = 1; k < e; ++k) p = p * g[pick[k]];
    gens.push_back(std::move(p));
    size_t k = e;
    while (k > 0) {
      --k;
      if (pick[k] + 1 < g.size()) {
        ++pick[k];
        for (size_t q = k + 1; q < e; ++q) pick[q] = pick[k];
        break;
      }
      if (k == 0) return Ideal(a.vars(), std::move(gens));
    }
  }
}

Ideal intersect(const Ideal& a, const Ideal& b, const GroebnerOptions& opt) {
  if (a.vars() != b.vars()) throw StructuralError("intersect: ring mismatch");
  const VarSet& vars = a.vars();
  if (a.is_zero_ideal() || b.is_zero_ideal()) return Ideal::zero(vars);

  VarSet ext = vars.prepended({vars.fresh_name("u_aux")});
  std::vector<int> up_map(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) up_map[i] = static_cast<int>(i + 1);
  Polynomial u = Polynomial::variable(ext, 0);
  Polynomial one_minus_u = Polynomial::constant(ext, 1) - u;

  std::vector<Polynomial> gens;
  for (const auto& f : a.gens()) gens.push_back(u * f.map_vars(ext, up_map));
  for (const auto& g : b.gens()) gens.push_back(one_minus_u * g.map_vars(ext, up_map));

  Ideal extended(ext, std::move(gens));
  MonomialOrder elim = MonomialOrder::block_elim(ext.size(), {0});
  const GroebnerBasis& gb = extended.groebner(elim, opt);

  std::vector<int> down_map(ext.size());
  down_map[0] = -1;
  for (size_t i = 0; i < vars.size(); ++i) down_map[i + 1] = static_cast<int>(i);
  std::vector<Polynomial> kept;
  for (const auto& e : gb.elems) {
    bool uses_u = false;
    for (const auto& t : e.terms())
      if (t.mono[0]) {
        uses_u = true;
        break;
      }
    if (!uses_u) kept.push_back(e.map_vars(vars, down_map));
  }
  Ideal result(vars, kept);
  // the filtered elements inherit reducedness; the block order restricted to
  // the aux-free monomials is degrevlex on the original ring
  GroebnerBasis seeded;
  seeded.order = MonomialOrder::degrevlex();
  seeded.elems = std::move(kept);
  seeded.stats = gb.stats;
  result.seed_groebner(std::move(seeded));
  return result;
}

Ideal intersect_many(std::vector<Ideal> ideals, const GroebnerOptions& opt) {
  if (ideals.empty()) throw StructuralError("intersect_many: empty list");
  while (ideals.size() > 1) {
    std::vector<Ideal> next;
    for (size_t i = 0; i + 1 < ideals.size(); i += 2)
      next.push_back(intersect(ideals[i], ideals[i + 1], opt));
    if (ideals.size() & 1) next.push_back(std::move(ideals.back()));
    ideals.swap(next);
  }
  return std::move(ideals.front());
}

Ideal quotient(const Ideal& I, const Polynomial& g, const GroebnerOptions& opt) {
  if (g.vars() != I.vars()) throw StructuralError("quotient: ring mismatch");
  if (g.is_zero()) throw StructuralError("quotient: zero divisor polynomial");
  if (I.is_zero_ideal()) return Ideal::zero(I.vars());
  Ideal cap = intersect(I, Ideal(I.vars(), {g}), opt);
  std::vector<Polynomial> gens;
  for (const auto& h : cap.gens()) {
    auto q = h.divided_exactly_by(g);
    if (!q) throw StructuralError("quotient: inexact division (internal)");
    gens.push_back(std::move(*q));
  }
  return Ideal(I.vars(), std::move(gens));
}

Ideal quotient_ideal(const Ideal& I, const Ideal& J, const GroebnerOptions& opt) {
  if (I.vars() != J.vars()) throw StructuralError("quotient_ideal: ring mismatch");
  if (J.is_zero_ideal()) throw StructuralError("quotient_ideal: zero denominator ideal");
  std::vector<Ideal> parts;
  for (const auto& g : J.gens()) parts.push_back(quotient(I, g, opt));
  return intersect_many(std::move(parts), opt);
}

Ideal saturate(const Ideal& I, const Ideal& J, const GroebnerOptions& opt, unsigned cap) {
  Ideal cur = I;
  for (unsigned round = 0; round < cap; ++round) {
    if (cur.is_zero_ideal()) return cur;
    Ideal next = quotient_ideal(cur, J, opt);
    if (ideal_equal(next, cur, opt)) return cur;
    cur = std::move(next);
  }
  throw StructuralError("saturate: no stabilization within iteration cap");
}

Ideal eliminate(const Ideal& I, const std::vector<size_t>& front, const GroebnerOptions& opt) {
  if (front.empty()) return I;
  for (size_t i : front)
    if (i >= I.vars().size()) throw StructuralError("eliminate: variable index out of range");
  if (I.is_zero_ideal()) return I;
  MonomialOrder ord = MonomialOrder::block_elim(I.vars().size(), front);
  const GroebnerBasis& gb = I.groebner(ord, opt);
  std::vector<char> is_front(I.vars().size(), 0);
  for (size_t i : front) is_front[i] = 1;
  std::vector<Polynomial> kept;
  for (const auto& e : gb.elems) {
    bool uses = false;
    for (const auto& t : e.terms()) {
      for (size_t i = 0; i < I.vars().size() && !uses; ++i)
        if (is_front[i] && t.mono[i]) uses = true;
      if (uses) break;
    }
    if (!uses) kept.push_back(e);
  }
  Ideal result(I.vars(), kept);
  GroebnerBasis seeded;
  seeded.order = MonomialOrder::degrevlex();
  seeded.elems = std::move(kept);
  seeded.stats = gb.stats;
  result.seed_groebner(std::move(seeded));
  return result;
}

size_t graded_piece_dim(const Ideal& I, unsigned d) {
  if (I.is_zero_ideal()) return 0;
  std::vector<Polynomial> span;
  for (const auto& g : I.gens()) {
    if (!g.is_homogeneous()) throw StructuralError("graded_piece_dim: inhomogeneous generator");
    int dg = g.degree();
    if (dg < 0 || static_cast<unsigned>(dg) > d) continue;
    for (const auto& m : monomials_of_degree(I.vars(), d - static_cast<unsigned>(dg)))
      span.push_back(g.times_term(Rational(1), m));
  }
  return span_dimension(span);
}

size_t quotient_piece_dim(const Ideal& I, unsigned d) {
  size_t k = I.vars().size();
  size_t all = static_cast<size_t>(binomial_l(static_cast<long>(k - 1 + d), static_cast<long>(k - 1)));
  return all - graded_piece_dim(I, d);
}

std::optional<unsigned> alpha_invariant(const Ideal& I, const GroebnerOptions& opt) {
  if (I.is_zero_ideal()) return std::nullopt;
  const GroebnerBasis& gb = I.groebner(MonomialOrder::degrevlex(), opt);
  unsigned best = 0;
  bool first = true;
  for (const auto& e : gb.elems) {
    unsigned d = static_cast<unsigned>(e.degree());
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

}  // namespace afold
