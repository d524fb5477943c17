#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/ffpoly.hpp"
#include "ecsec/arith/gf.hpp"
#include "ecsec/arith/integer.hpp"
#include "ecsec/elliptic/curve.hpp"
#include "ecsec/elliptic/divpoly.hpp"

namespace ecsec {

using ECurve = Curve<GF>;
using EPoint = Point<GF>;

// Raised when the torsion needs a field beyond the configured extension cap.
class ExtensionCapExceeded : public DomainError {
 public:
  ExtensionCapExceeded(int needed, int cap)
      : DomainError("no order-N point over extensions up to degree bound " + std::to_string(cap) + " (needs degree " +
                    std::to_string(needed) + ")"),
        needed_(needed) {}
  int needed() const { return needed_; }

 private:
  int needed_;
};

// Cyclic subgroup of order N: multiples[k] = k P, kernel D_C = prod over
// {Q, -Q} of (x - x(Q)), label = least x-coordinate string.
struct Subgroup {
  std::vector<EPoint> multiples;
  GFPoly kernel;
  std::vector<GF> xs;  // sorted x-coordinates of C \ {O}, each once
  std::string label;

  int order() const { return static_cast<int>(multiples.size()); }
  const EPoint& generator() const { return multiples.at(1); }
};

inline std::string label_of(const std::vector<GF>& xs) {
  std::string best;
  for (const auto& x : xs) {
    const std::string s = x.str();
    if (best.empty() || s < best) best = s;
  }
  return best;
}

inline Subgroup make_subgroup(const ECurve& e, const EPoint& p, int n) {
  Subgroup c;
  c.multiples.push_back(EPoint::identity());
  EPoint t = p;
  for (int k = 1; k < n; ++k) {
    if (t.infinity) throw DomainError("generator " + p.str() + " has order " + std::to_string(k));
    c.multiples.push_back(t);
    t = e.add(t, p);
  }
  if (!t.infinity) throw DomainError("generator " + p.str() + " does not have order " + std::to_string(n));
  const GF z = e.zero();
  c.kernel = GFPoly::constant(z.one());
  for (int k = 1; 2 * k < n; ++k) {
    c.kernel = c.kernel * GFPoly(z, {-c.multiples[k].x, z.one()});
    c.xs.push_back(c.multiples[k].x);
  }
  std::sort(c.xs.begin(), c.xs.end());
  c.label = label_of(c.xs);
  return c;
}

// Roots y of y^2 + A y - B = 0 for the curve at abscissa x, if any in the field of x.
inline std::vector<GF> y_coordinates(const ECurve& e, const GF& x, std::uint64_t seed) {
  const GF z = e.zero();
  const GF a = e.a1() * x + e.a3();
  const GF b = ((x + e.a2()) * x + e.a4()) * x + e.a6();
  return roots(GFPoly(z, {-b, a, z.one()}), seed);
}

inline bool has_rational_y(const ECurve& e, const GF& x) {
  const GF a = e.a1() * x + e.a3();
  const GF b = ((x + e.a2()) * x + e.a4()) * x + e.a6();
  const GFContext& ctx = x.field();
  if (ctx.p != 2) {
    const GF d = a * a + x.from_int(4) * b;
    return d.is_zero() || d.pow((ctx.order - 1) / 2).is_one();
  }
  if (a.is_zero()) return true;  // squaring is bijective
  // y = a w turns the equation into w^2 + w = b / a^2, solvable iff the trace vanishes.
  GF t = b / (a * a), tr = t;
  for (int i = 1; i < ctx.degree; ++i) {
    t = t * t;
    tr = tr + t;
  }
  return tr.is_zero();
}

inline int multiplicative_order_mod(std::uint32_t p, int n) {
  int k = 1;
  long v = p % n;
  while (v != 1) {
    v = v * static_cast<long>(p) % n;
    ++k;
  }
  return k;
}

// A primitive n-th root of unity in ctx; requires n | |ctx| - 1.
inline GF primitive_root_of_unity(const GFContext& ctx, int n, std::uint64_t seed) {
  const Integer q1 = ctx.order - 1;
  if (q1 % n != 0) throw DomainError("field " + GF(ctx).field_name() + " has no primitive " + std::to_string(n) + "-th root of unity");
  std::vector<int> primes;
  for (int r = 2, m = n; m > 1; ++r)
    if (m % r == 0) {
      primes.push_back(r);
      while (m % r == 0) m /= r;
    }
  std::mt19937_64 rng(seed);
  for (;;) {
    const GF g = GF::random(ctx, rng);
    if (g.is_zero()) continue;
    const GF w = g.pow(Integer(q1 / n));
    bool ok = true;
    for (int r : primes)
      if (w.pow(static_cast<long>(n / r)).is_one()) ok = false;
    if (ok) return w;
  }
}

// A point of exact order n over the smallest extension of the curve's field
// where its x-coordinate lives, or its quadratic extension when y needs it.
inline std::pair<ECurve, EPoint> find_order_N_point(const ECurve& e, int n, std::uint64_t seed, int ext_cap) {
  if (n == 1) return {e, EPoint::identity()};
  const GFContext& base = e.zero().field();
  if (n % static_cast<int>(base.p) == 0) throw DomainError("characteristic divides N");
  const GFPoly psi = division_polynomial(e, n);
  auto ddf = distinct_degree_factorization(psi);
  for (const auto& [d, part] : ddf) {
    const int xdeg = base.degree * d;
    if (xdeg > ext_cap) throw ExtensionCapExceeded(xdeg, ext_cap);
    const GFContext& xf = ext_field(base.p, xdeg);
    const auto embed_map = [&](const GF& a) { return embed(a, xf); };
    const ECurve ex = e.mapped(embed_map);
    for (const auto& x : roots(lift(part, xf), seed)) {
      const int ydeg = has_rational_y(ex, x) ? xdeg : 2 * xdeg;
      if (ydeg > ext_cap) continue;
      const GFContext& kf = ext_field(base.p, ydeg);
      const ECurve ek = ex.mapped([&](const GF& a) { return embed(a, kf); });
      const GF xk = embed(x, kf);
      const auto ys = y_coordinates(ek, xk, seed);
      if (ys.empty()) continue;
      const EPoint p = EPoint::affine(xk, ys.front());
      EPoint t = p;
      int order = 1;
      while (!t.infinity && order <= n) {
        t = ek.add(t, p);
        ++order;
      }
      if (order == n) return {ek, p};
    }
  }
  throw ExtensionCapExceeded(2 * base.degree * (ddf.empty() ? 1 : ddf.back().first), ext_cap);
}

// E[N] for prime N over a field K containing it, with the N+1 cyclic
// subgroups of order N in label order.
struct FullTorsion {
  ECurve curve;  // over K
  int n = 0;
  EPoint p1, p2;
  std::vector<Subgroup> subgroups;

  const GFContext& field() const { return curve.zero().field(); }
  // a P1 + b P2
  EPoint combination(long a, long b) const { return curve.add(curve.mul(a, p1), curve.mul(b, p2)); }
};

inline bool is_prime_small(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// The field degree is rounded up to a multiple of degree_multiple.
inline FullTorsion full_torsion(const ECurve& e, int n, std::uint64_t seed, int ext_cap, int degree_multiple = 1) {
  if (!is_prime_small(n) || n == 2) throw DomainError("subgroup enumeration needs an odd prime N, got " + std::to_string(n));
  const GFContext& base = e.zero().field();
  if (static_cast<int>(base.p) == n) throw DomainError("characteristic divides N");
  const GFPoly psi = division_polynomial(e, n);
  long l = 1;
  for (const auto& [d, part] : distinct_degree_factorization(psi)) l = static_cast<long>(lcm_u64(l, d));
  const int xdeg = base.degree * static_cast<int>(l);
  if (xdeg > ext_cap) throw ExtensionCapExceeded(xdeg, ext_cap);
  const GFContext& xf = ext_field(base.p, xdeg);
  const ECurve ex = e.mapped([&](const GF& a) { return embed(a, xf); });
  const auto xroots = roots(lift(psi, xf), seed);
  if (static_cast<int>(xroots.size()) != (n * n - 1) / 2) throw DomainError("division polynomial is not separable");
  bool all_y = true;
  for (const auto& x : xroots)
    if (!has_rational_y(ex, x)) {
      all_y = false;
      break;
    }
  int kdeg = static_cast<int>(lcm_u64(all_y ? xdeg : 2 * xdeg, degree_multiple));
  const int mu = multiplicative_order_mod(base.p, n);
  if (kdeg % mu != 0) throw DomainError("torsion field misses the N-th roots of unity");
  if (kdeg > ext_cap) throw ExtensionCapExceeded(kdeg, ext_cap);
  const GFContext& kf = ext_field(base.p, kdeg);

  // Through X, so that the curve and the roots use the same embedding.
  FullTorsion t{ex.mapped([&](const GF& a) { return embed(a, kf); }), n, {}, {}, {}};
  std::vector<GF> xk;
  for (const auto& x : xroots) xk.push_back(embed(x, kf));
  std::sort(xk.begin(), xk.end());
  auto point_at = [&](const GF& x) {
    const auto ys = y_coordinates(t.curve, x, seed);
    if (ys.empty()) throw DomainError("torsion abscissa without ordinate");
    return EPoint::affine(x, ys.front());
  };
  t.p1 = point_at(xk.front());
  const Subgroup c1 = make_subgroup(t.curve, t.p1, n);
  const std::set<GF> in_c1(c1.xs.begin(), c1.xs.end());
  for (const auto& x : xk)
    if (!in_c1.count(x)) {
      t.p2 = point_at(x);
      break;
    }
  t.subgroups.push_back(c1);
  for (long a = 0; a < n; ++a) t.subgroups.push_back(make_subgroup(t.curve, t.curve.add(t.p2, t.curve.mul(a, t.p1)), n));
  std::sort(t.subgroups.begin(), t.subgroups.end(), [](const Subgroup& a, const Subgroup& b) { return a.label < b.label; });
  return t;
}

}  // namespace ecsec
