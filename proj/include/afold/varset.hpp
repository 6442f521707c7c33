#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "afold/numeric.hpp"

namespace afold {

// Hard cap on ring size: monomials store exponents in a fixed array.
inline constexpr size_t kMaxVars = 24;

enum class VarBlock : uint8_t { X = 0, T = 1 };

// Ordered list of named variables, each tagged with a grading block.
// X-variables have degree (1,0), T-variables (0,1). Value type with cheap
// copies; equality is structural.
class VarSet {
 public:
  VarSet() = default;

  // All variables in the X block.
  static VarSet standard(std::vector<std::string> names);
  // X block followed by T block.
  static VarSet bigraded(std::vector<std::string> x_names, std::vector<std::string> t_names);

  size_t size() const { return data_ ? data_->names.size() : 0; }
  const std::string& name(size_t i) const { return data_->names.at(i); }
  VarBlock block(size_t i) const { return data_->blocks.at(i); }
  const std::vector<std::string>& names() const { return data_->names; }

  bool has_t_block() const;
  size_t x_count() const;
  size_t t_count() const;

  std::optional<size_t> index_of(const std::string& name) const;

  // New set with extra X-variables inserted at the front (elimination block).
  VarSet prepended(const std::vector<std::string>& front_names) const;
  // A name not present in this set, derived from `stem`.
  std::string fresh_name(const std::string& stem) const;

  bool operator==(const VarSet& o) const;
  bool operator!=(const VarSet& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<VarBlock> blocks;
  };
  explicit VarSet(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  static VarSet make(std::vector<std::string> names, std::vector<VarBlock> blocks);
  std::shared_ptr<const Data> data_;
};

}  // namespace afold
