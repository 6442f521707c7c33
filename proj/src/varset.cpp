#include "afold/varset.hpp"

#include <algorithm>
#include <set>

namespace afold {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty number", 0);
  size_t i = 0;
  auto digits = [&](size_t start) {
    size_t j = start;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (text[i] == '-' || text[i] == '+') ++i;
  size_t j = digits(i);
  if (j == i) throw ParseError("expected digits", i);
  if (j < text.size()) {
    if (text[j] != '/') throw ParseError("unexpected character in number", j);
    size_t k = digits(j + 1);
    if (k == j + 1 || k != text.size()) throw ParseError("bad denominator", j + 1);
  }
  Rational q(text);
  q.canonicalize();
  return q;
}

VarSet VarSet::make(std::vector<std::string> names, std::vector<VarBlock> blocks) {
  if (names.size() > kMaxVars) throw StructuralError("too many variables (cap 24)");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw StructuralError("empty variable name");
    if (!seen.insert(n).second) throw StructuralError("duplicate variable name: " + n);
  }
  auto d = std::make_shared<Data>();
  d->names = std::move(names);
  d->blocks = std::move(blocks);
  return VarSet(std::move(d));
}

VarSet VarSet::standard(std::vector<std::string> names) {
  std::vector<VarBlock> blocks(names.size(), VarBlock::X);
  return make(std::move(names), std::move(blocks));
}

VarSet VarSet::bigraded(std::vector<std::string> x_names, std::vector<std::string> t_names) {
  std::vector<std::string> names = std::move(x_names);
  std::vector<VarBlock> blocks(names.size(), VarBlock::X);
  for (auto& n : t_names) {
    names.push_back(std::move(n));
    blocks.push_back(VarBlock::T);
  }
  return make(std::move(names), std::move(blocks));
}

bool VarSet::has_t_block() const {
  if (!data_) return false;
  return std::any_of(data_->blocks.begin(), data_->blocks.end(),
                     [](VarBlock b) { return b == VarBlock::T; });
}

size_t VarSet::x_count() const {
  if (!data_) return 0;
  return static_cast<size_t>(std::count(data_->blocks.begin(), data_->blocks.end(), VarBlock::X));
}

size_t VarSet::t_count() const { return size() - x_count(); }

std::optional<size_t> VarSet::index_of(const std::string& name) const {
  if (!data_) return std::nullopt;
  for (size_t i = 0; i < data_->names.size(); ++i)
    if (data_->names[i] == name) return i;
  return std::nullopt;
}

VarSet VarSet::prepended(const std::vector<std::string>& front_names) const {
  std::vector<std::string> names(front_names);
  std::vector<VarBlock> blocks(front_names.size(), VarBlock::X);
  for (size_t i = 0; i < size(); ++i) {
    names.push_back(data_->names[i]);
    blocks.push_back(data_->blocks[i]);
  }
  return make(std::move(names), std::move(blocks));
}

std::string VarSet::fresh_name(const std::string& stem) const {
  std::string n = stem;
  while (index_of(n)) n += "_";
  return n;
}

bool VarSet::operator==(const VarSet& o) const {
  if (data_ == o.data_) return true;
  if (!data_ || !o.data_) return size() == o.size() && size() == 0;
  return data_->names == o.data_->names && data_->blocks == o.data_->blocks;
}

}  // namespace afold
