#pragma once

#include <string>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/rational.hpp"

namespace ecsec {

// Valuations n_i of a function along the components of an e-gon, given the
// signed counts r_i of zeros and poles meeting each component.
struct NgonProfile {
  int e = 0;
  std::vector<long> r;
  std::vector<Rational> n;

  bool integral() const {
    for (const auto& v : n)
      if (!v.is_integer()) return false;
    return true;
  }
};

// Residual of relation i: (n_{i+1} - n_i) + (n_{i-1} - n_i) + r_i.
inline Rational ngon_residual(const NgonProfile& p, int i) {
  const int e = p.e;
  const Rational& prev = p.n[(i + e - 1) % e];
  const Rational& next = p.n[(i + 1) % e];
  return (next - p.n[i]) + (prev - p.n[i]) + Rational(p.r[i]);
}

// Unique solution with sum n_i = 0. With d_i = n_{i+1} - n_i the relations
// read d_i = d_{i-1} - r_i, so d_i = d_0 - (r_1 + ... + r_i); the cyclic
// condition sum d_i = 0 fixes d_0.
inline NgonProfile solve_valuations(int e, const std::vector<long>& r) {
  if (e < 1) throw DomainError("n-gon width must be positive");
  if (static_cast<int>(r.size()) != e) throw DomainError("n-gon profile needs exactly e counts");
  long total = 0;
  for (long v : r) total += v;
  if (total != 0) throw DomainError("inconsistent profile: counts sum to " + std::to_string(total));
  std::vector<Rational> prefix(e);  // prefix[i] = r_1 + ... + r_i
  Rational acc;
  Rational prefix_total;
  for (int i = 1; i < e; ++i) {
    acc += Rational(r[i]);
    prefix[i] = acc;
    prefix_total += acc;
  }
  const Rational d0 = prefix_total / Rational(e);
  NgonProfile out{e, r, std::vector<Rational>(e)};
  Rational mean;
  for (int i = 1; i < e; ++i) {
    out.n[i] = out.n[i - 1] + (d0 - prefix[i - 1]);
    mean += out.n[i];
  }
  mean /= Rational(e);
  for (auto& v : out.n) v -= mean;
  return out;
}

}  // namespace ecsec
