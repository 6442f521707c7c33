#include "afold/ideal.hpp"

#include "afold/groebner.hpp"

namespace afold {

Ideal::Ideal(VarSet vars, std::vector<Polynomial> gens) : vars_(std::move(vars)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (g.vars() != vars_) throw StructuralError("Ideal: generator ring mismatch");
    gens_.push_back(std::move(g));
  }
  canonical_sort_unique(gens_);
  cache_ = std::make_shared<std::map<std::string, GroebnerBasis>>();
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& ord, const GroebnerOptions& opt) const {
  if (!cache_) cache_ = std::make_shared<std::map<std::string, GroebnerBasis>>();
  auto it = cache_->find(ord.key());
  if (it != cache_->end()) return it->second;
  GroebnerBasis gb = buchberger(vars_, gens_, ord, opt);
  return cache_->emplace(ord.key(), std::move(gb)).first->second;
}

void Ideal::seed_groebner(GroebnerBasis gb) const {
  if (!cache_) cache_ = std::make_shared<std::map<std::string, GroebnerBasis>>();
  cache_->emplace(gb.order.key(), std::move(gb));
}

}  // namespace afold
