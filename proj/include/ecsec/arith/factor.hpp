#pragma once

#include <map>
#include <string>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/integer.hpp"

namespace ecsec {

struct Factorization {
  int sign = 1;
  std::map<Integer, int> primes;
  // Unfactored part (1 when complete). Never claimed prime.
  Integer cofactor = 1;

  bool complete() const { return cofactor == 1; }

  Integer value() const {
    Integer v = sign;
    for (const auto& [p, e] : primes) v *= ipow(p, static_cast<unsigned long>(e));
    return v * cofactor;
  }

  // e.g. "-3 * 7^18 * 43^2"
  std::string str() const {
    std::string s = sign < 0 ? "-" : "";
    bool first = true;
    for (const auto& [p, e] : primes) {
      if (!first) s += " * ";
      s += p.get_str();
      if (e > 1) s += "^" + std::to_string(e);
      first = false;
    }
    if (cofactor != 1) {
      if (!first) s += " * ";
      s += "[" + cofactor.get_str() + "]";
      first = false;
    }
    if (first) s += "1";
    return s;
  }
};

// Trial division up to bound, then division by the hint primes. A cofactor
// below bound^2 left after trial division is prime; anything else is reported
// as an unfactored cofactor.
inline Factorization factor_integer(const Integer& n, const std::vector<Integer>& hints = {},
                                    unsigned long bound = 1000000) {
  if (n == 0) throw DomainError("factorization of zero");
  Factorization f;
  Integer m = n;
  if (m < 0) {
    f.sign = -1;
    m = -m;
  }
  auto strip = [&](const Integer& p) {
    int e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    if (e > 0) f.primes[p] += e;
  };
  strip(Integer(2));
  for (unsigned long d = 3; d <= bound; d += 2) {
    if (m == 1) break;
    if (Integer(d) * d > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) strip(Integer(d));
  }
  for (const auto& h : hints)
    if (h > 1 && m != 1) strip(h);
  // Every prime factor of m now exceeds the bound, so m <= bound^2 is prime.
  if (m != 1 && m <= Integer(bound) * bound) {
    f.primes[m] += 1;
    m = 1;
  }
  f.cofactor = m;
  return f;
}

}  // namespace ecsec
