#pragma once

#include <gmpxx.h>

#include <string>

namespace kgspin {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

// "p/q" with q omitted when 1.
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int factorial(long n) {
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

// Binomial coefficient, zero outside the triangle.
inline Int binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int b = 1;
  for (long i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

}  // namespace kgspin
