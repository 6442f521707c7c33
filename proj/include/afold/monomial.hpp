#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

#include "afold/varset.hpp"

namespace afold {

// Exponent vector with cached total degree. Fixed storage (kMaxVars slots);
// slots past nvars are zero. Monomials do not know their VarSet, only its
// size; Polynomial carries the VarSet.
class Monomial {
 public:
  Monomial() : nv_(0), deg_(0) { e_.fill(0); }
  explicit Monomial(size_t nvars) : nv_(static_cast<uint8_t>(nvars)), deg_(0) {
    if (nvars > kMaxVars) throw StructuralError("too many variables (cap 24)");
    e_.fill(0);
  }

  static Monomial one(size_t nvars) { return Monomial(nvars); }
  static Monomial var(size_t nvars, size_t i, unsigned exp = 1) {
    Monomial m(nvars);
    m.set(i, exp);
    return m;
  }

  size_t nvars() const { return nv_; }
  unsigned operator[](size_t i) const { return e_[i]; }
  unsigned degree() const { return deg_; }

  void set(size_t i, unsigned exp) {
    if (exp > 255) throw StructuralError("exponent overflow");
    deg_ = deg_ - e_[i] + exp;
    e_[i] = static_cast<uint8_t>(exp);
  }

  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const {
    Monomial r(nv_);
    unsigned d = 0;
    for (size_t i = 0; i < nv_; ++i) {
      unsigned s = unsigned(e_[i]) + unsigned(o.e_[i]);
      if (s > 255) throw StructuralError("exponent overflow");
      r.e_[i] = static_cast<uint8_t>(s);
      d += s;
    }
    r.deg_ = static_cast<uint16_t>(d);
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (size_t i = 0; i < nv_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // Quotient o / this is computed by the caller as o.divided_by(*this).
  Monomial divided_by(const Monomial& d) const {
    Monomial r(nv_);
    for (size_t i = 0; i < nv_; ++i) r.e_[i] = static_cast<uint8_t>(e_[i] - d.e_[i]);
    r.deg_ = static_cast<uint16_t>(deg_ - d.deg_);
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nv_);
    unsigned d = 0;
    for (size_t i = 0; i < a.nv_; ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      d += r.e_[i];
    }
    r.deg_ = static_cast<uint16_t>(d);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.nv_; ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const {
    return nv_ == o.nv_ && deg_ == o.deg_ && std::memcmp(e_.data(), o.e_.data(), nv_) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (size_t i = 0; i < nv_; ++i) {
      h ^= e_[i];
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::array<uint8_t, kMaxVars> e_;
  uint8_t nv_;
  uint16_t deg_;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace afold
