#pragma once

#include <string>
#include <vector>

#include "afold/monomial.hpp"

namespace afold {

// Global monomial orders. Value type; block-based kinds carry their own mask
// so an order stays valid independently of any VarSet object.
class MonomialOrder {
 public:
  enum class Kind : uint8_t { Degrevlex, Lex, BlockElim, BigradedDegrevlex };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}); }

  // front variables dominate: degrevlex on the front block, ties broken by
  // degrevlex on the rest. Eliminates the front block.
  static MonomialOrder block_elim(size_t nvars, const std::vector<size_t>& front);

  // Compares X-degree, then T-degree, then full degrevlex.
  static MonomialOrder bigraded_degrevlex(const VarSet& vars);

  Kind kind() const { return kind_; }

  // <0, 0, >0 meaning a < b, a == b, a > b under the order.
  int compare(const Monomial& a, const Monomial& b) const;

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  // Cache key; equal keys mean identical comparison behavior.
  const std::string& key() const { return key_; }

  bool operator==(const MonomialOrder& o) const { return key_ == o.key_; }

 private:
  MonomialOrder(Kind k, std::vector<uint8_t> mask);
  Kind kind_;
  std::vector<uint8_t> mask_;  // per-variable flag: in front block / in X block
  std::string key_;
};

}  // namespace afold
