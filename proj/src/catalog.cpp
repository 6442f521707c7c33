#include "afold/catalog.hpp"

namespace afold {

namespace {

Arrangement make(const std::vector<std::string>& names,
                 const std::vector<std::pair<std::string, unsigned>>& forms) {
  VarSet v = VarSet::standard(names);
  std::vector<std::pair<Polynomial, unsigned>> fs;
  for (const auto& [text, mult] : forms) fs.emplace_back(Polynomial::parse(v, text), mult);
  return Arrangement(std::move(v), std::move(fs));
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  out.push_back({"boolean2", "coordinate lines in the plane", make({"x", "y"}, {{"x", 1}, {"y", 1}})});
  out.push_back({"triple2", "three concurrent-free lines in the plane",
                 make({"x", "y"}, {{"x", 1}, {"y", 1}, {"x + y", 1}})});
  out.push_back({"four_lines2", "four distinct lines in the plane",
                 make({"x", "y"}, {{"x", 1}, {"y", 1}, {"x + y", 1}, {"x - y", 1}})});
  out.push_back({"double2", "doubled line plus a simple one",
                 make({"x", "y"}, {{"x", 2}, {"y", 1}})});
  out.push_back({"double3", "doubled plane plus two coordinate planes",
                 make({"x", "y", "z"}, {{"x", 2}, {"y", 1}, {"z", 1}})});
  out.push_back({"mixed3", "two doubled planes, two simple ones",
                 make({"x", "y", "z"}, {{"x", 2}, {"y", 2}, {"z", 1}, {"x + y", 1}})});
  out.push_back({"boolean3", "coordinate planes in 3-space",
                 make({"x", "y", "z"}, {{"x", 1}, {"y", 1}, {"z", 1}})});
  out.push_back({"generic4", "four planes, no three through a line",
                 make({"x", "y", "z"}, {{"x", 1}, {"y", 1}, {"z", 1}, {"x + y + z", 1}})});
  out.push_back({"near_pencil4", "three concurrent lines plus one more",
                 make({"x", "y", "z"}, {{"x", 1}, {"y", 1}, {"x + y", 1}, {"z", 1}})});
  out.push_back({"generic5", "five planes in general position",
                 make({"x", "y", "z"},
                      {{"x", 1}, {"y", 1}, {"z", 1}, {"x + y + z", 1}, {"x + 2*y + 3*z", 1}})});
  out.push_back({"braid3", "differences of coordinates, rank two",
                 make({"x", "y", "z"}, {{"x - y", 1}, {"x - z", 1}, {"y - z", 1}})});
  out.push_back({"boolean4", "coordinate hyperplanes in 4-space",
                 make({"x", "y", "z", "w"}, {{"x", 1}, {"y", 1}, {"z", 1}, {"w", 1}})});
  out.push_back({"generic5_p3", "five generic hyperplanes in projective 3-space",
                 make({"x", "y", "z", "w"},
                      {{"x", 1}, {"y", 1}, {"z", 1}, {"w", 1}, {"x + y + z + w", 1}})});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const Arrangement* catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e.arrangement;
  return nullptr;
}

const Arrangement& star_arrangement(unsigned N, unsigned s) {
  const char* name = nullptr;
  if (N == 2 && s == 3) name = "boolean3";
  if (N == 2 && s == 4) name = "generic4";
  if (N == 2 && s == 5) name = "generic5";
  if (N == 3 && s == 4) name = "boolean4";
  if (N == 3 && s == 5) name = "generic5_p3";
  if (!name) throw StructuralError("no generic arrangement for this (N, s)");
  return *catalog_find(name);
}

}  // namespace afold
