#pragma once

#include <numeric>
#include <vector>

#include "ecsec/arith/ffpoly.hpp"
#include "ecsec/elliptic/torsion.hpp"

namespace ecsec {

// Change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t mapping the
// curve to itself; apply() sends (x', y') to (x, y).
struct Automorphism {
  GF u, r, s, t;

  EPoint apply(const EPoint& p) const {
    if (p.infinity) return p;
    const GF u2 = u * u;
    return EPoint::affine(u2 * p.x + r, u2 * u * p.y + s * u2 * p.x + t);
  }
};

// The standard transformation rules for a1..a6 with equal source and target.
inline bool preserves(const ECurve& e, const Automorphism& a) {
  const GF &u = a.u, &r = a.r, &s = a.s, &t = a.t;
  const GF u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  auto c = [&](long v) { return u.from_int(v); };
  return u * e.a1() == e.a1() + c(2) * s &&
         u2 * e.a2() == e.a2() - s * e.a1() + c(3) * r - s * s &&
         u3 * e.a3() == e.a3() + r * e.a1() + c(2) * t &&
         u4 * e.a4() == e.a4() - s * e.a3() + c(2) * r * e.a2() - (t + r * s) * e.a1() + c(3) * r * r - c(2) * s * t &&
         u6 * e.a6() == e.a6() + r * e.a4() + r * r * e.a2() + r * r * r - t * e.a3() - t * t - r * t * e.a1();
}

namespace detail {

inline std::vector<GF> roots_of_unity(const GF& z, long k) {
  std::vector<GF> c(static_cast<std::size_t>(k) + 1, z);
  c[0] = -z.one();
  c[k] = z.one();
  return roots(GFPoly(z, c), 0);
}

}  // namespace detail

// Automorphisms defined over the curve's field for the special models built
// by curve_from_j; any other curve gets {+1, -1}. Every candidate is checked
// against the transformation rules.
inline std::vector<Automorphism> automorphisms(const ECurve& e) {
  const GF z = e.zero(), one = z.one();
  const long p = z.characteristic();
  std::vector<Automorphism> cand;
  const bool j0 = e.j_invariant().is_zero();
  const bool j1728 = e.j_invariant() == z.from_int(1728);
  const bool plain = e.a1().is_zero() && e.a2().is_zero() && e.a3().is_zero();
  if (p == 2 && j0 && e.a1().is_zero() && e.a2().is_zero() && e.a4().is_zero() && e.a6().is_zero()) {
    // y^2 + a3 y = x^3: u^3 = 1, r = s^2, s^4 + s = 0, t^2 + t + s^6 = 0 (a3 = 1)
    for (const auto& u : detail::roots_of_unity(z, 3))
      for (const auto& s : roots(GFPoly(z, {z, one, z, z, one}), 0)) {
        const GF s6 = s.pow(6L);
        for (const auto& t : roots(GFPoly(z, {s6, one, one}), 0)) cand.push_back({u, s * s, s, t});
      }
  } else if (p == 3 && j0 && plain && e.a6().is_zero()) {
    // y^2 = x^3 + a4 x: u^4 = 1, r^3 + a4 r = 0
    for (const auto& u : detail::roots_of_unity(z, 4))
      for (const auto& r : roots(GFPoly(z, {z, e.a4(), z, one}), 0)) cand.push_back({u, r, z, z});
  } else if (p != 2 && p != 3 && plain && e.a2().is_zero() && (j0 || j1728)) {
    for (const auto& u : detail::roots_of_unity(z, j0 ? 6 : 4)) cand.push_back({u, z, z, z});
  } else {
    // Negation: u = -1, s = -a1, t = -a3 (r = 0).
    cand.push_back({one, z, z, z});
    cand.push_back({-one, z, -e.a1(), -e.a3()});
  }
  std::vector<Automorphism> out;
  for (const auto& a : cand)
    if (preserves(e, a)) out.push_back(a);
  return out;
}

// orbit[i] = least index of a subgroup in the Aut-orbit of subgroup i.
inline std::vector<int> subgroup_orbits(const FullTorsion& t, const std::vector<Automorphism>& auts) {
  const int count = static_cast<int>(t.subgroups.size());
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < count; ++i)
    for (const auto& a : auts) {
      const EPoint img = a.apply(t.subgroups[i].generator());
      if (!t.curve.contains(img)) throw DomainError("automorphism does not preserve the curve");
      for (int k = 0; k < count; ++k) {
        const auto& xs = t.subgroups[k].xs;
        if (std::binary_search(xs.begin(), xs.end(), img.x)) {
          const int a1 = find(i), b1 = find(k);
          parent[std::max(a1, b1)] = std::min(a1, b1);
          break;
        }
      }
    }
  std::vector<int> orbit(count);
  for (int i = 0; i < count; ++i) orbit[i] = find(i);
  return orbit;
}

}  // namespace ecsec
