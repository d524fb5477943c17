#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ecsec {

using Integer = mpz_class;

inline Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer igcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer ilcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Nonnegative residue of a modulo m (m > 0).
inline std::uint32_t mod_u32(const Integer& a, std::uint32_t m) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(a.get_mpz_t(), m));
}

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return a / gcd_u64(a, b) * b;
}

}  // namespace ecsec
