#include "afold/resolution.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace afold {

namespace {

int64_t ms_clock() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

// Shared budget for module-level reductions.
struct ModBudget {
  int64_t start = ms_clock();
  uint64_t max_ms = 0;
  uint64_t max_pairs = 0;
  uint64_t pairs = 0;
  uint64_t ticks = 0;

  void on_pair() {
    ++pairs;
    if (max_pairs && pairs > max_pairs) fail();
    poll();
  }
  void on_step() {
    if ((++ticks & 1023) == 0) poll();
  }
  void poll() {
    if (!max_ms) return;
    if (static_cast<uint64_t>(ms_clock() - start) > max_ms) fail();
  }
  [[noreturn]] void fail() const {
    GroebnerStats st;
    st.pairs_generated = pairs;
    st.ms = ms_clock() - start;
    throw BudgetExceeded("module computation budget exceeded", st);
  }
};

struct MTerm {
  Monomial mono;
  uint32_t pos;
  Rational coeff;
};

struct MVec {
  std::vector<MTerm> t;  // strictly descending under the active module order
  bool zero() const { return t.empty(); }
  const MTerm& lt() const { return t.front(); }
};

// Module order: position 0 dominates when elim0 is set (kernel extraction);
// otherwise terms compare through per-position anchor monomials with a fixed
// index chain as tiebreak (a flattened Schreyer tower).
struct ModOrder {
  MonomialOrder ring = MonomialOrder::degrevlex();
  bool elim0 = false;
  std::vector<Monomial> anchor;
  std::vector<std::vector<uint32_t>> tie;

  int compare(const Monomial& ma, uint32_t pa, const Monomial& mb, uint32_t pb) const {
    if (elim0) {
      const bool a0 = pa == 0, b0 = pb == 0;
      if (a0 != b0) return a0 ? 1 : -1;
      int c = ring.compare(ma, mb);
      if (c) return c;
      if (pa != pb) return pa < pb ? 1 : -1;
      return 0;
    }
    if (!anchor.empty()) {
      int c = ring.compare(ma * anchor[pa], mb * anchor[pb]);
      if (c) return c;
      if (pa != pb) {
        const auto& ta = tie[pa];
        const auto& tb = tie[pb];
        for (size_t i = 0; i < ta.size() && i < tb.size(); ++i)
          if (ta[i] != tb[i]) return ta[i] < tb[i] ? 1 : -1;
        return ta.size() < tb.size() ? 1 : -1;  // chains are distinct
      }
      return 0;
    }
    int c = ring.compare(ma, mb);
    if (c) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
  int compare(const MTerm& a, const MTerm& b) const {
    return compare(a.mono, a.pos, b.mono, b.pos);
  }
};

void sort_mvec(MVec& v, const ModOrder& ord) {
  std::sort(v.t.begin(), v.t.end(),
            [&](const MTerm& a, const MTerm& b) { return ord.compare(a, b) > 0; });
  std::vector<MTerm> out;
  out.reserve(v.t.size());
  for (auto& t : v.t) {
    if (!out.empty() && out.back().pos == t.pos && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
  }
  v.t.swap(out);
}

// h := h - c * m * g, merging the descending streams; h is consumed from
// `start` (its prefix is already fully reduced).
void sub_mul_mvec(MVec& h, size_t start, const Rational& c, const Monomial& m, const MVec& g,
                  const ModOrder& ord, MVec& out) {
  out.t.clear();
  out.t.reserve(h.t.size() + g.t.size());
  size_t i = start, j = 0;
  while (i < h.t.size() && j < g.t.size()) {
    MTerm gt{g.t[j].mono * m, g.t[j].pos, -(c * g.t[j].coeff)};
    int cmp = ord.compare(h.t[i].mono, h.t[i].pos, gt.mono, gt.pos);
    if (cmp > 0) {
      out.t.push_back(h.t[i++]);
    } else if (cmp < 0) {
      out.t.push_back(std::move(gt));
      ++j;
    } else {
      Rational s = h.t[i].coeff + gt.coeff;
      if (s != 0) out.t.push_back({h.t[i].mono, h.t[i].pos, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < h.t.size(); ++i) out.t.push_back(h.t[i]);
  for (; j < g.t.size(); ++j) out.t.push_back({g.t[j].mono * m, g.t[j].pos, -(c * g.t[j].coeff)});
}

struct MRed {
  size_t idx;
  Monomial m;
  Rational c;
};

// Full tail reduction over G; optionally records every subtraction.
MVec nf_mvec(MVec f, const std::vector<MVec>& G, const ModOrder& ord, std::vector<MRed>* rec,
             ModBudget* bud) {
  MVec done;
  MVec next;
  size_t start = 0;
  while (start < f.t.size()) {
    const MTerm& lt = f.t[start];
    size_t red = G.size();
    for (size_t k = 0; k < G.size(); ++k) {
      if (G[k].zero()) continue;
      const MTerm& gl = G[k].lt();
      if (gl.pos == lt.pos && gl.mono.divides(lt.mono)) {
        red = k;
        break;
      }
    }
    if (red == G.size()) {
      done.t.push_back(lt);
      ++start;
      continue;
    }
    if (bud) bud->on_step();
    Rational c = lt.coeff / G[red].lt().coeff;
    Monomial m = lt.mono.divided_by(G[red].lt().mono);
    if (rec) rec->push_back({red, m, c});
    sub_mul_mvec(f, start, c, m, G[red], ord, next);
    f.t.swap(next.t);
    start = 0;
  }
  return done;
}

void make_monic_mvec(MVec& v) {
  if (v.zero()) return;
  Rational lead = v.lt().coeff;
  for (auto& t : v.t) t.coeff /= lead;
}

// Reduced module basis: minimal leading terms, tails reduced, monic.
std::vector<MVec> interreduce_mvec(std::vector<MVec> G, const ModOrder& ord, ModBudget* bud) {
  std::vector<size_t> idx(G.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return ord.compare(G[a].lt(), G[b].lt()) < 0;
  });
  std::vector<char> keep(G.size(), 0);
  std::vector<size_t> kept;
  for (size_t k : idx) {
    bool redundant = false;
    for (size_t q : kept)
      if (G[q].lt().pos == G[k].lt().pos && G[q].lt().mono.divides(G[k].lt().mono)) {
        redundant = true;
        break;
      }
    if (!redundant) {
      kept.push_back(k);
      keep[k] = 1;
    }
  }
  std::vector<MVec> pool;
  std::vector<size_t> order_of;  // pool slot per kept element, in kept order
  for (size_t k : kept) {
    order_of.push_back(pool.size());
    pool.push_back(std::move(G[k]));
  }
  for (size_t s = 0; s < pool.size(); ++s) {
    MVec self = std::move(pool[s]);
    pool[s].t.clear();  // excluded while reducing (zero vectors are skipped)
    MVec r = nf_mvec(std::move(self), pool, ord, nullptr, bud);
    make_monic_mvec(r);
    pool[s] = std::move(r);
  }
  return pool;
}

MVec spair_mvec(const MVec& f, const MVec& g, const ModOrder& ord) {
  const MTerm& lf = f.lt();
  const MTerm& lg = g.lt();
  Monomial l = Monomial::lcm(lf.mono, lg.mono);
  Monomial mf = l.divided_by(lf.mono);
  Monomial mg = l.divided_by(lg.mono);
  MVec h;
  h.t.reserve(f.t.size());
  for (const auto& t : f.t) h.t.push_back({t.mono * mf, t.pos, t.coeff});
  MVec out;
  sub_mul_mvec(h, 0, lf.coeff / lg.coeff, mg, g, ord, out);
  return out;
}

// Buchberger over a free module, no pair pruning; fine at the sizes the
// syzygy extraction sees.
std::vector<MVec> module_groebner(std::vector<MVec> gens, const ModOrder& ord, ModBudget* bud) {
  std::vector<MVec> basis;
  std::vector<std::pair<size_t, size_t>> pairs;
  auto push = [&](MVec v) {
    make_monic_mvec(v);
    for (size_t i = 0; i < basis.size(); ++i)
      if (basis[i].lt().pos == v.lt().pos) pairs.emplace_back(i, basis.size());
    basis.push_back(std::move(v));
  };
  for (auto& g : gens) {
    if (g.zero()) continue;
    MVec r = nf_mvec(std::move(g), basis, ord, nullptr, bud);
    if (!r.zero()) push(std::move(r));
  }
  while (!pairs.empty()) {
    if (bud) bud->on_pair();
    // smallest lcm first keeps intermediate vectors short
    size_t best = 0;
    auto lcm_of = [&](const std::pair<size_t, size_t>& p) {
      return Monomial::lcm(basis[p.first].lt().mono, basis[p.second].lt().mono);
    };
    Monomial bl = lcm_of(pairs[best]);
    for (size_t k = 1; k < pairs.size(); ++k) {
      Monomial kl = lcm_of(pairs[k]);
      if (ord.ring.compare(kl, bl) < 0) {
        best = k;
        bl = kl;
      }
    }
    auto [i, j] = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();
    MVec s = spair_mvec(basis[i], basis[j], ord);
    if (s.zero()) continue;
    MVec r = nf_mvec(std::move(s), basis, ord, nullptr, bud);
    if (!r.zero()) push(std::move(r));
  }
  return basis;
}

ModBudget budget_from(const GroebnerOptions& opt) {
  ModBudget b;
  b.max_ms = opt.max_ms;
  b.max_pairs = opt.max_pairs;
  return b;
}

Polynomial row_polynomial(const VarSet& vars, const MVec& v, uint32_t row) {
  std::vector<Term> terms;
  for (const auto& t : v.t)
    if (t.pos == row) terms.push_back({t.mono, t.coeff});
  return Polynomial::from_terms(vars, std::move(terms));
}

int mvec_twist(const MVec& v, const std::vector<int>& prev_twists) {
  return static_cast<int>(v.lt().mono.degree()) + prev_twists[v.lt().pos];
}

// Ascending position, lexicographically descending leading monomial inside a
// position group: each level of syzygy leading terms then avoids one more
// variable, which bounds the length of the tower.
void sort_schreyer(std::vector<MVec>& v) {
  const MonomialOrder lex = MonomialOrder::lex();
  std::sort(v.begin(), v.end(), [&](const MVec& a, const MVec& b) {
    if (a.lt().pos != b.lt().pos) return a.lt().pos < b.lt().pos;
    return lex.compare(a.lt().mono, b.lt().mono) > 0;
  });
}

long long ring_piece_dim(size_t nvars, long d) {
  if (d < 0) return 0;
  return binomial_l(static_cast<long>(nvars) - 1 + d, static_cast<long>(nvars) - 1);
}

}  // namespace

long long BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

int BettiTable::length() const {
  int m = 0;
  for (const auto& [key, cnt] : entries)
    if (cnt) m = std::max(m, key.first);
  return m;
}

std::string BettiTable::render() const {
  if (entries.empty()) return "empty Betti table\n";
  int imax = 0, dmin = 0, dmax = 0;
  bool first = true;
  for (const auto& [key, cnt] : entries) {
    if (!cnt) continue;
    const int d = key.second - key.first;
    imax = std::max(imax, key.first);
    dmin = first ? d : std::min(dmin, d);
    dmax = first ? d : std::max(dmax, d);
    first = false;
  }
  std::vector<long long> totals(imax + 1, 0);
  for (const auto& [key, cnt] : entries)
    if (key.first <= imax) totals[key.first] += cnt;

  const int w = 7;
  std::ostringstream os;
  auto cell = [&](const std::string& s) {
    os << std::string(s.size() >= w ? 1 : w - s.size(), ' ') << s;
  };
  cell("");
  for (int i = 0; i <= imax; ++i) cell(std::to_string(i));
  os << '\n';
  cell("total:");
  for (int i = 0; i <= imax; ++i) cell(std::to_string(totals[i]));
  os << '\n';
  for (int d = dmin; d <= dmax; ++d) {
    cell(std::to_string(d) + ":");
    for (int i = 0; i <= imax; ++i) {
      long long b = at(i, d + i);
      cell(b ? std::to_string(b) : ".");
    }
    os << '\n';
  }
  return os.str();
}

PolyMatrix syzygies(const VarSet& vars, const std::vector<Polynomial>& gens,
                    const GroebnerOptions& opt) {
  for (const auto& g : gens)
    if (g.is_zero()) throw StructuralError("syzygies: zero generator");
  ModBudget bud = budget_from(opt);
  ModOrder ord;
  ord.elim0 = true;

  std::vector<MVec> input;
  for (size_t i = 0; i < gens.size(); ++i) {
    MVec v;
    for (const auto& t : gens[i].terms()) v.t.push_back({t.mono, 0, t.coeff});
    v.t.push_back({Monomial::one(vars.size()), static_cast<uint32_t>(i + 1), 1});
    sort_mvec(v, ord);
    input.push_back(std::move(v));
  }
  std::vector<MVec> gb = module_groebner(std::move(input), ord, &bud);

  PolyMatrix cols;
  for (const auto& v : gb) {
    if (v.zero() || v.lt().pos == 0) continue;  // still carries ring content
    std::vector<Polynomial> col;
    for (size_t r = 1; r <= gens.size(); ++r)
      col.push_back(row_polynomial(vars, v, static_cast<uint32_t>(r)));
    cols.push_back(std::move(col));
  }
  return cols;
}

Resolution free_resolution(const Ideal& I, const GroebnerOptions& opt) {
  Resolution res;
  res.ring = I.vars();
  if (I.is_zero_ideal()) {
    res.twists.push_back({});
    return res;
  }
  ModBudget bud = budget_from(opt);
  const MonomialOrder drl = MonomialOrder::degrevlex();
  const std::vector<Polynomial>& gb0 = I.groebner(drl, opt).elems;

  // Level 0 lives over the ring itself: one anchor, empty chain.
  ModOrder ord;
  ord.ring = drl;
  ord.anchor = {Monomial::one(res.ring.size())};
  ord.tie = {{}};
  std::vector<MVec> cur;
  for (const auto& g : gb0) {
    MVec v;
    for (const auto& t : g.terms()) v.t.push_back({t.mono, 0, t.coeff});
    cur.push_back(std::move(v));
  }
  sort_schreyer(cur);

  std::vector<int> twists0;
  for (const auto& v : cur) {
    res.augmentation.push_back(row_polynomial(res.ring, v, 0));
    twists0.push_back(mvec_twist(v, {0}));
  }
  res.twists.push_back(std::move(twists0));

  while (true) {
    if (res.twists.size() > res.ring.size() + 1)
      throw StructuralError("resolution exceeds the variable-count bound");

    // Schreyer order on the next free module, anchored at current leads.
    ModOrder next;
    next.ring = drl;
    for (const auto& v : cur) {
      const MTerm& l = v.lt();
      next.anchor.push_back(l.mono * ord.anchor[l.pos]);
      auto chain = ord.tie[l.pos];
      chain.push_back(static_cast<uint32_t>(next.tie.size()));
      next.tie.push_back(std::move(chain));
    }

    std::vector<MVec> syz;
    for (size_t p = 0; p < cur.size(); ++p)
      for (size_t q = p + 1; q < cur.size(); ++q) {
        if (cur[p].lt().pos != cur[q].lt().pos) continue;
        bud.on_pair();
        const Monomial& mp = cur[p].lt().mono;
        const Monomial& mq = cur[q].lt().mono;
        Monomial l = Monomial::lcm(mp, mq);
        std::vector<MRed> rec;
        MVec s = spair_mvec(cur[p], cur[q], ord);
        if (!s.zero()) {
          MVec r = nf_mvec(std::move(s), cur, ord, &rec, &bud);
          if (!r.zero()) throw StructuralError("s-vector escaped the module basis");
        }
        MVec tau;
        tau.t.push_back({l.divided_by(mp), static_cast<uint32_t>(p), 1});
        tau.t.push_back(
            {l.divided_by(mq), static_cast<uint32_t>(q), -(cur[p].lt().coeff / cur[q].lt().coeff)});
        for (const auto& rd : rec)
          tau.t.push_back({rd.m, static_cast<uint32_t>(rd.idx), -rd.c});
        sort_mvec(tau, next);
        if (!tau.zero()) syz.push_back(std::move(tau));
      }

    if (syz.empty()) break;
    syz = interreduce_mvec(std::move(syz), next, &bud);
    std::erase_if(syz, [](const MVec& v) { return v.zero(); });
    if (syz.empty()) break;
    sort_schreyer(syz);

    PolyMatrix mat;
    std::vector<int> tw;
    for (const auto& v : syz) {
      std::vector<Polynomial> col;
      for (uint32_t r = 0; r < cur.size(); ++r) col.push_back(row_polynomial(res.ring, v, r));
      mat.push_back(std::move(col));
      tw.push_back(mvec_twist(v, res.twists.back()));
    }
    res.steps.push_back(std::move(mat));
    res.twists.push_back(std::move(tw));

    ord = std::move(next);
    cur = std::move(syz);
  }
  return res;
}

std::pair<Resolution, BettiTable> minimize(Resolution res) {
  const size_t levels = res.steps.size();
  for (size_t l = 0; l < levels; ++l) {
    while (true) {
      PolyMatrix& M = res.steps[l];
      size_t rows = res.twists[l].size();
      size_t pr = rows, pc = M.size();
      for (size_t r = 0; r < rows && pr == rows; ++r)
        for (size_t c = 0; c < M.size(); ++c)
          if (!M[c][r].is_zero() && M[c][r].degree() == 0) {
            pr = r;
            pc = c;
            break;
          }
      if (pr == rows) break;

      const Rational lambda = M[pc][pr].terms()[0].coeff;
      for (size_t c = 0; c < M.size(); ++c) {
        if (c == pc || M[c][pr].is_zero()) continue;
        const Polynomial f = M[c][pr].scaled(1 / lambda);
        for (size_t r = 0; r < rows; ++r)
          if (r != pr) M[c][r] = M[c][r] - M[pc][r] * f;
      }
      M.erase(M.begin() + static_cast<long>(pc));
      for (auto& col : M) col.erase(col.begin() + static_cast<long>(pr));
      res.twists[l + 1].erase(res.twists[l + 1].begin() + static_cast<long>(pc));
      res.twists[l].erase(res.twists[l].begin() + static_cast<long>(pr));
      if (l + 1 < levels)
        for (auto& col : res.steps[l + 1]) col.erase(col.begin() + static_cast<long>(pc));
      if (l > 0)
        res.steps[l - 1].erase(res.steps[l - 1].begin() + static_cast<long>(pr));
      else
        res.augmentation.erase(res.augmentation.begin() + static_cast<long>(pr));
    }
  }
  while (!res.twists.empty() && res.twists.back().empty()) {
    res.twists.pop_back();
    if (!res.steps.empty()) res.steps.pop_back();
  }

  BettiTable table;
  for (size_t l = 0; l < res.twists.size(); ++l)
    for (int t : res.twists[l]) ++table.entries[{static_cast<int>(l), t}];
  return {std::move(res), std::move(table)};
}

BettiTable betti_table(const Ideal& I, const GroebnerOptions& opt) {
  return minimize(free_resolution(I, opt)).second;
}

bool check_resolution(const Resolution& res) {
  // Degree bookkeeping: a nonzero entry is homogeneous of the twist gap.
  for (size_t l = 0; l < res.steps.size(); ++l) {
    const PolyMatrix& M = res.steps[l];
    if (!M.empty() && res.twists[l].size() != M[0].size()) return false;
    if (res.twists[l + 1].size() != M.size()) return false;
    for (size_t c = 0; c < M.size(); ++c)
      for (size_t r = 0; r < M[c].size(); ++r) {
        const Polynomial& e = M[c][r];
        if (e.is_zero()) continue;
        if (!e.is_homogeneous()) return false;
        if (e.degree() != res.twists[l + 1][c] - res.twists[l][r]) return false;
      }
  }
  // Composites vanish, including the augmentation against the first step.
  if (!res.steps.empty()) {
    const PolyMatrix& M = res.steps[0];
    for (const auto& col : M) {
      Polynomial acc = Polynomial::zero(res.ring);
      for (size_t r = 0; r < col.size(); ++r) acc = acc + res.augmentation[r] * col[r];
      if (!acc.is_zero()) return false;
    }
  }
  for (size_t l = 0; l + 1 < res.steps.size(); ++l) {
    const PolyMatrix& A = res.steps[l];
    const PolyMatrix& B = res.steps[l + 1];
    const size_t rows = res.twists[l].size();
    for (const auto& bcol : B)
      for (size_t r = 0; r < rows; ++r) {
        Polynomial acc = Polynomial::zero(res.ring);
        for (size_t m = 0; m < bcol.size(); ++m) acc = acc + A[m][r] * bcol[m];
        if (!acc.is_zero()) return false;
      }
  }
  return true;
}

bool euler_consistent(const Resolution& res, const Ideal& I, unsigned dmax) {
  const size_t k = res.ring.size();
  for (unsigned d = 0; d <= dmax; ++d) {
    long long alternating = 0;
    long long sign = 1;
    for (const auto& level : res.twists) {
      for (int t : level) alternating += sign * ring_piece_dim(k, static_cast<long>(d) - t);
      sign = -sign;
    }
    if (alternating != static_cast<long long>(graded_piece_dim(I, d))) return false;
  }
  return true;
}

int regularity_quotient(const BettiTable& ideal_table) {
  if (ideal_table.entries.empty()) return 0;  // the zero ideal leaves the ring itself
  int m = 0;
  bool seen = false;
  for (const auto& [key, cnt] : ideal_table.entries) {
    if (!cnt) continue;
    const int v = key.second - key.first;
    m = seen ? std::max(m, v) : v;
    seen = true;
  }
  return m - 1;
}

std::optional<bool> has_linear_resolution(const BettiTable& ideal_table) {
  if (ideal_table.entries.empty()) return true;
  std::optional<int> d;
  for (const auto& [key, cnt] : ideal_table.entries) {
    if (!cnt || key.first != 0) continue;
    if (d && *d != key.second) return std::nullopt;  // mixed generator degrees
    d = key.second;
  }
  if (!d) return std::nullopt;
  for (const auto& [key, cnt] : ideal_table.entries)
    if (cnt && key.second != *d + key.first) return false;
  return true;
}

}  // namespace afold
