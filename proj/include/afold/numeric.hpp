#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace afold {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator), which the rest of the library relies on for == and hashing.
using Rational = mpq_class;
using Integer = mpz_class;

struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), position(pos) {}
};

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Accepts "123", "-4/7". Throws ParseError on anything else.
Rational parse_rational(const std::string& text);

inline Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

inline long binomial_l(long n, long k) { return binomial(n, k).get_si(); }

}  // namespace afold
