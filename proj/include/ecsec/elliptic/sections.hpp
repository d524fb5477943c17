#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/matrix.hpp"
#include "ecsec/elliptic/function.hpp"
#include "ecsec/elliptic/torsion.hpp"

namespace ecsec {

// Rows: coordinates of the Miller sections of the given points in the basis
// of L(N O).
inline Matrix<GF> section_matrix(const ECurve& e, const std::vector<EPoint>& points, int n) {
  Matrix<GF> m;
  for (const auto& p : points) m.push_back(section_coordinates(miller_section(e, p, n), n));
  return m;
}

inline int rank_c(const ECurve& e, const Subgroup& c) {
  const int n = c.order();
  return n - static_cast<int>(matrix_rank(section_matrix(e, c.multiples, n)));
}

// Random affine points of E(K) outside the subgroup c.
inline std::vector<EPoint> sample_points(const ECurve& e, const Subgroup& c, int count, std::uint64_t seed) {
  const GFContext& k = e.zero().field();
  if (k.order < Integer(4 * count + 4 * c.order()))
    throw DomainError("field " + e.zero().field_name() + " too small to sample; use a larger extension degree");
  std::mt19937_64 rng(seed);
  std::set<GF> xs_c(c.xs.begin(), c.xs.end());
  std::vector<EPoint> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 1000 * count) throw DomainError("sampling failed; use a larger extension degree");
    const GF x = GF::random(k, rng);
    if (xs_c.count(x) || !has_rational_y(e, x)) continue;
    const auto ys = y_coordinates(e, x, rng());
    const EPoint p = EPoint::affine(x, ys[rng() % ys.size()]);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

// values[i][k] = s_{kP}(X_i) = 1 / D_C(x(X_i - kP)).
inline Matrix<GF> coherent_section_values(const ECurve& e, const Subgroup& c, const std::vector<EPoint>& samples) {
  Matrix<GF> v;
  for (const auto& x : samples) {
    std::vector<GF> row;
    for (const auto& p : c.multiples) {
      const EPoint d = e.sub(x, p);
      if (d.infinity) throw DomainError("sample point lies in the subgroup");
      const GF den = c.kernel.eval(d.x);
      if (den.is_zero()) throw DomainError("sample point lies in the subgroup");
      row.push_back(den.inv());
    }
    v.push_back(std::move(row));
  }
  return v;
}

// g[i][m] = sum_k omega^{m k} s_{kP}(X_i).
inline Matrix<GF> character_values(const Matrix<GF>& s, const GF& omega) {
  const int n = s.empty() ? 0 : static_cast<int>(s[0].size());
  std::vector<GF> pw(n, omega.one());
  for (int i = 1; i < n; ++i) pw[i] = pw[i - 1] * omega;
  Matrix<GF> g;
  for (const auto& row : s) {
    std::vector<GF> out(n, omega.zero());
    for (int m = 0; m < n; ++m)
      for (int k = 0; k < n; ++k) out[m] += pw[(static_cast<long>(m) * k) % n] * row[k];
    g.push_back(std::move(out));
  }
  return g;
}

// Everything the coherent model says about one subgroup.
struct CharacterAnalysis {
  std::vector<int> vanishing;  // residues m with g_m = 0
  int evaluation_rank = 0;     // max over the resamplings
  bool product_constant = true;
  bool symmetric = true;
};

// Two independent resamplings of M = N + 4 points each; g_m counts as zero
// when it vanishes at every sample of both.
inline CharacterAnalysis char_vanishing(const ECurve& e, const Subgroup& c, const GF& omega, std::uint64_t seed) {
  const int n = c.order();
  CharacterAnalysis out;
  std::vector<bool> zero(n, true);
  for (int round = 0; round < 2; ++round) {
    const auto samples = sample_points(e, c, n + 4, seed + 0x9e3779b97f4a7c15ULL * (round + 1));
    const auto s = coherent_section_values(e, c, samples);
    out.evaluation_rank = std::max(out.evaluation_rank, static_cast<int>(matrix_rank(s)));
    std::vector<EPoint> negated;
    for (const auto& x : samples) negated.push_back(e.negate(x));
    const auto g = character_values(s, omega);
    const auto gneg = character_values(coherent_section_values(e, c, negated), omega);
    GF first;
    for (std::size_t i = 0; i < s.size(); ++i) {
      GF prod = omega.one();
      for (const auto& v : s[i]) prod *= v;
      if (i == 0) first = prod;
      if (prod != first) out.product_constant = false;
      for (int m = 0; m < n; ++m) {
        if (!g[i][m].is_zero()) zero[m] = false;
        if (gneg[i][m] != g[i][(n - m) % n]) out.symmetric = false;
      }
    }
  }
  for (int m = 0; m < n; ++m)
    if (zero[m]) out.vanishing.push_back(m);
  return out;
}

}  // namespace ecsec
