#include "afold/order.hpp"

namespace afold {

namespace {

// degrevlex: higher total degree wins; on ties the monomial with the smaller
// exponent at the last differing position is greater.
inline int cmp_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

inline int cmp_lex(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.nvars(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

// degrevlex restricted to the variables selected by mask.
inline int cmp_degrevlex_masked(const Monomial& a, const Monomial& b,
                                const std::vector<uint8_t>& mask, uint8_t want) {
  unsigned da = 0, db = 0;
  for (size_t i = 0; i < a.nvars(); ++i) {
    if (mask[i] == want) {
      da += a[i];
      db += b[i];
    }
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.nvars(); i-- > 0;) {
    if (mask[i] == want && a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

MonomialOrder::MonomialOrder(Kind k, std::vector<uint8_t> mask) : kind_(k), mask_(std::move(mask)) {
  switch (kind_) {
    case Kind::Degrevlex: key_ = "drl"; break;
    case Kind::Lex: key_ = "lex"; break;
    case Kind::BlockElim: key_ = "blk:"; break;
    case Kind::BigradedDegrevlex: key_ = "big:"; break;
  }
  for (uint8_t m : mask_) key_ += m ? '1' : '0';
}

MonomialOrder MonomialOrder::block_elim(size_t nvars, const std::vector<size_t>& front) {
  std::vector<uint8_t> mask(nvars, 0);
  for (size_t i : front) {
    if (i >= nvars) throw StructuralError("block_elim: variable index out of range");
    mask[i] = 1;
  }
  return MonomialOrder(Kind::BlockElim, std::move(mask));
}

MonomialOrder MonomialOrder::bigraded_degrevlex(const VarSet& vars) {
  std::vector<uint8_t> mask(vars.size(), 0);
  for (size_t i = 0; i < vars.size(); ++i) mask[i] = vars.block(i) == VarBlock::X ? 1 : 0;
  return MonomialOrder(Kind::BigradedDegrevlex, std::move(mask));
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Degrevlex:
      return cmp_degrevlex(a, b);
    case Kind::Lex:
      return cmp_lex(a, b);
    case Kind::BlockElim: {
      if (int r = cmp_degrevlex_masked(a, b, mask_, 1)) return r;
      return cmp_degrevlex_masked(a, b, mask_, 0);
    }
    case Kind::BigradedDegrevlex: {
      unsigned xa = 0, xb = 0;
      for (size_t i = 0; i < a.nvars(); ++i) {
        if (mask_[i]) {
          xa += a[i];
          xb += b[i];
        }
      }
      if (xa != xb) return xa < xb ? -1 : 1;
      unsigned ta = a.degree() - xa, tb = b.degree() - xb;
      if (ta != tb) return ta < tb ? -1 : 1;
      return cmp_degrevlex(a, b);
    }
  }
  return 0;
}

}  // namespace afold
