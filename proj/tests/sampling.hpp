#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ecsec/elliptic/sections.hpp"
#include "ecsec/elliptic/torsion.hpp"

namespace ecsec::sampling {

inline ECurve random_curve(const GFContext& ctx, std::mt19937_64& rng) {
  for (;;) {
    try {
      return ECurve(GF::random(ctx, rng), GF::random(ctx, rng), GF::random(ctx, rng), GF::random(ctx, rng),
                    GF::random(ctx, rng));
    } catch (const DomainError&) {
    }
  }
}

// Outcome of the rank oracles on one (E, C).
struct PairCheck {
  std::string curve, label;
  int n = 0;
  int c = 0;
  int vanishing = 0;
  int evaluation_rank = 0;
  int scaled_rank = 0;
  int coset_rank = 0;
  bool symmetric = true;
  bool product_constant = true;

  bool counting_ok() const { return vanishing == c; }
  bool scalar_ok(int n) const { return scaled_rank == n - c; }
  bool coset_ok(int n) const { return coset_rank == n - c; }
  bool model_ok(int n) const { return evaluation_rank == n - c; }
};

inline PairCheck check_pair(const FullTorsion& t, int index, std::mt19937_64& rng) {
  const int n = t.n;
  const ECurve& e = t.curve;
  const Subgroup& c = t.subgroups.at(index);
  const GFContext& k = t.field();
  PairCheck out;
  out.curve = e.str();
  out.label = c.label;
  out.n = n;
  out.c = rank_c(e, c);

  const GF omega = primitive_root_of_unity(k, n, rng());
  const auto an = char_vanishing(e, c, omega, rng());
  out.vanishing = static_cast<int>(an.vanishing.size());
  out.evaluation_rank = an.evaluation_rank;
  out.symmetric = an.symmetric;
  out.product_constant = an.product_constant;

  auto m = section_matrix(e, c.multiples, n);
  for (auto& row : m) {
    GF s;
    do s = GF::random(k, rng);
    while (s.is_zero());
    for (auto& v : row) v = v * s;
  }
  out.scaled_rank = static_cast<int>(matrix_rank(m));

  EPoint q;
  for (;;) {
    q = t.combination(static_cast<long>(rng() % n), static_cast<long>(rng() % n));
    if (!q.infinity && !std::binary_search(c.xs.begin(), c.xs.end(), q.x)) break;
  }
  std::vector<EPoint> shifted;
  for (const auto& p : c.multiples) shifted.push_back(e.add(p, q));
  out.coset_rank = static_cast<int>(matrix_rank(section_matrix(e, shifted, n)));
  return out;
}

}  // namespace ecsec::sampling
