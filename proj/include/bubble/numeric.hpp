#pragma once

#include <gmpxx.h>

#include <string>

namespace bubble {

using BigInt = mpz_class;
using Rat = mpq_class;

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace bubble
