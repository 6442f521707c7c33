#pragma once

#include "afold/arrangement.hpp"

namespace afold {

struct CatalogEntry {
  std::string name;
  std::string description;
  Arrangement arrangement;
};

// Named desk-scale arrangements used by the verification suites.
const std::vector<CatalogEntry>& catalog();

// nullptr when the name is unknown.
const Arrangement* catalog_find(const std::string& name);

// Generic arrangement of s hyperplanes in projective N-space (N+1 variables),
// meeting properly. Supported: N = 2 with 3 <= s <= 5, N = 3 with 4 <= s <= 5.
const Arrangement& star_arrangement(unsigned N, unsigned s);

}  // namespace afold
