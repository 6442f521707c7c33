#include "afold/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace afold {

size_t QMatrix::row_reduce() {
  size_t rank = 0;
  for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
    size_t piv = rank;
    while (piv < rows_ && a_[piv][col] == 0) ++piv;
    if (piv == rows_) continue;
    std::swap(a_[piv], a_[rank]);
    Rational inv = Rational(1) / a_[rank][col];
    for (size_t c = col; c < cols_; ++c) a_[rank][c] *= inv;
    for (size_t r = 0; r < rows_; ++r) {
      if (r == rank || a_[r][col] == 0) continue;
      Rational f = a_[r][col];
      for (size_t c = col; c < cols_; ++c) a_[r][c] -= f * a_[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
  QMatrix m = *this;
  m.row_reduce();
  std::vector<long> pivot_of_col(cols_, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols_ && r < rows_; ++c) {
    if (m.a_[r][c] != 0) pivot_of_col[c] = static_cast<long>(r++);
  }
  std::vector<std::vector<Rational>> basis;
  for (size_t free_c = 0; free_c < cols_; ++free_c) {
    if (pivot_of_col[free_c] >= 0) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[free_c] = 1;
    for (size_t c = 0; c < cols_; ++c) {
      if (pivot_of_col[c] >= 0) v[c] = -m.a_[static_cast<size_t>(pivot_of_col[c])][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {
void enumerate(const VarSet& vars, size_t idx, unsigned remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (idx + 1 == vars.size()) {
    cur.set(idx, remaining);
    out.push_back(cur);
    cur.set(idx, 0);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur.set(idx, e);
    enumerate(vars, idx + 1, remaining - e, cur, out);
  }
  cur.set(idx, 0);
}
}  // namespace

std::vector<Monomial> monomials_of_degree(const VarSet& vars, unsigned d) {
  std::vector<Monomial> out;
  if (vars.size() == 0) {
    if (d == 0) out.push_back(Monomial::one(0));
    return out;
  }
  Monomial cur(vars.size());
  enumerate(vars, 0, d, cur, out);
  MonomialOrder ord = MonomialOrder::degrevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
  return out;
}

std::vector<Monomial> monomials_of_bidegree(const VarSet& vars, unsigned dx, unsigned dt) {
  std::vector<Monomial> out;
  std::vector<size_t> xi, ti;
  for (size_t i = 0; i < vars.size(); ++i)
    (vars.block(i) == VarBlock::X ? xi : ti).push_back(i);
  // enumerate each block independently, then merge
  std::vector<std::vector<unsigned>> xparts, tparts;
  auto rec = [](const std::vector<size_t>& idxs, unsigned d, auto&& self, size_t k,
                std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& res) -> void {
    if (k + 1 >= idxs.size()) {
      if (idxs.empty()) {
        if (d == 0) res.push_back(cur);
        return;
      }
      cur[k] = d;
      res.push_back(cur);
      cur[k] = 0;
      return;
    }
    for (unsigned e = 0; e <= d; ++e) {
      cur[k] = e;
      self(idxs, d - e, self, k + 1, cur, res);
    }
    cur[k] = 0;
  };
  {
    std::vector<unsigned> cur(xi.size(), 0);
    if (xi.empty() && dx != 0) return out;
    rec(xi, dx, rec, 0, cur, xparts);
  }
  {
    std::vector<unsigned> cur(ti.size(), 0);
    if (ti.empty() && dt != 0) return out;
    rec(ti, dt, rec, 0, cur, tparts);
  }
  for (const auto& xp : xparts) {
    for (const auto& tp : tparts) {
      Monomial m(vars.size());
      for (size_t k = 0; k < xi.size(); ++k) m.set(xi[k], xp[k]);
      for (size_t k = 0; k < ti.size(); ++k) m.set(ti[k], tp[k]);
      out.push_back(m);
    }
  }
  MonomialOrder ord = MonomialOrder::degrevlex();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
  return out;
}

size_t span_dimension(const std::vector<Polynomial>& polys) {
  if (polys.empty()) return 0;
  std::unordered_map<Monomial, size_t, MonomialHash> col;
  for (const auto& p : polys)
    for (const auto& t : p.terms())
      col.emplace(t.mono, col.size());
  QMatrix m(polys.size(), col.size());
  for (size_t r = 0; r < polys.size(); ++r)
    for (const auto& t : polys[r].terms()) m.at(r, col[t.mono]) = t.coeff;
  return m.row_reduce();
}

}  // namespace afold
