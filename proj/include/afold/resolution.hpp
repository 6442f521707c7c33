#pragma once

#include "afold/groebner.hpp"

#include <map>

namespace afold {

// Columns of step matrices hold the image of each source basis element.
using PolyMatrix = std::vector<std::vector<Polynomial>>;  // [col][row]

// Graded free resolution of an ideal: F_len -> ... -> F_1 -> F_0 -> I -> 0.
struct Resolution {
  VarSet ring;
  std::vector<std::vector<int>> twists;  // twists[l] lists degrees of F_l's basis
  std::vector<Polynomial> augmentation;  // images of F_0 basis elements in the ring
  std::vector<PolyMatrix> steps;         // steps[l] : F_{l+1} -> F_l
};

struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;  // (homological, internal) -> count

  long long at(int i, int j) const;
  int length() const;  // largest homological index present
  // Rows are internal degree minus homological index, columns homological.
  std::string render() const;
};

// Generating set of the first syzygy module of the given tuple, as columns.
PolyMatrix syzygies(const VarSet& vars, const std::vector<Polynomial>& gens,
                    const GroebnerOptions& opt = {});

// Resolves by iterated syzygies of the reduced basis; not minimal in general.
Resolution free_resolution(const Ideal& I, const GroebnerOptions& opt = {});

// Cancels unit entries; the table counts the minimal resolution's twists.
std::pair<Resolution, BettiTable> minimize(Resolution res);

BettiTable betti_table(const Ideal& I, const GroebnerOptions& opt = {});

// d compose d vanishes and the first step lands in the kernel of augmentation.
bool check_resolution(const Resolution& res);

// Alternating twist counts reproduce the ideal's Hilbert function up to dmax.
bool euler_consistent(const Resolution& res, const Ideal& I, unsigned dmax);

// Largest internal minus homological degree, shifted to the quotient ring.
int regularity_quotient(const BettiTable& ideal_table);

// True when every entry sits on the single allowed diagonal; disengaged
// (nullopt) when minimal generators mix degrees.
std::optional<bool> has_linear_resolution(const BettiTable& ideal_table);

}  // namespace afold
