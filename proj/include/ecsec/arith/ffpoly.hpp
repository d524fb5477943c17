#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/gf.hpp"
#include "ecsec/arith/matrix.hpp"
#include "ecsec/arith/poly.hpp"

namespace ecsec {

// x^{|F|} mod f over the coefficient field F of f.
inline GFPoly x_pow_q_mod(const GFPoly& f) {
  const GF z = f.proto();
  return GFPoly::powmod(GFPoly::x(z), z.field().order, f);
}

// Degrees d and products of the distinct monic irreducible factors of degree d
// (each factor taken once, multiplicities dropped).
inline std::vector<std::pair<int, GFPoly>> distinct_degree_factorization(GFPoly f) {
  std::vector<std::pair<int, GFPoly>> out;
  if (f.degree() < 1) return out;
  f = f.monic();
  const GF z = f.proto();
  const GFPoly x = GFPoly::x(z);
  const Integer q = z.field().order;
  GFPoly h = x;
  for (int d = 1; f.degree() >= 1; ++d) {
    h = GFPoly::powmod(h, q, f);
    GFPoly g = GFPoly::gcd(h - x, f);
    if (g.degree() >= 1) {
      out.emplace_back(d, g);
      while (true) {
        GFPoly c = GFPoly::gcd(f, g);
        if (c.degree() < 1) break;
        f = f.exact_div(c);
      }
      if (f.degree() >= 1) h = h % f;
    }
  }
  return out;
}

inline bool is_irreducible(const GFPoly& f) {
  if (f.degree() < 1) return false;
  const auto ddf = distinct_degree_factorization(f);
  return ddf.size() == 1 && ddf[0].first == f.degree() && ddf[0].second.degree() == f.degree();
}

namespace detail {

// Splits a product of distinct linear factors into its roots.
template <class Rng>
void split_linear(const GFPoly& g, Rng& rng, std::vector<GF>& roots) {
  if (g.degree() < 1) return;
  if (g.degree() == 1) {
    roots.push_back(-(g.coeff(0) / g.coeff(1)));
    return;
  }
  const GF z = g.proto();
  const GFContext& ctx = z.field();
  while (true) {
    const GF a = GF::random(ctx, rng);
    GFPoly t;
    if (ctx.p == 2) {
      // Absolute trace of a*x: sum_{i < k} (a x)^{2^i} mod g.
      GFPoly term = GFPoly(z, {z.zero(), a}) % g;
      t = term;
      for (int i = 1; i < ctx.degree; ++i) {
        term = (term * term) % g;
        t = t + term;
      }
    } else {
      const GFPoly base(z, {a, z.one()});
      t = GFPoly::powmod(base, (ctx.order - 1) / 2, g) - GFPoly::constant(z.one());
    }
    GFPoly d = GFPoly::gcd(t, g);
    if (d.degree() >= 1 && d.degree() < g.degree()) {
      split_linear(d, rng, roots);
      split_linear(g.exact_div(d), rng, roots);
      return;
    }
  }
}

}  // namespace detail

// All distinct roots of f in its coefficient field, sorted.
template <class Rng>
std::vector<GF> roots(const GFPoly& f, Rng& rng) {
  if (f.is_zero()) throw DomainError("roots of the zero polynomial");
  std::vector<GF> out;
  if (f.degree() < 1) return out;
  const GFPoly m = f.monic();
  const GFPoly x = GFPoly::x(m.proto());
  GFPoly g = GFPoly::gcd(x_pow_q_mod(m) - x, m);
  detail::split_linear(g, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<GF> roots(const GFPoly& f, std::uint64_t seed = 0) {
  std::mt19937_64 rng(seed);
  return roots(f, rng);
}

// Image of the generator of small inside big: the least root of small's modulus.
inline GF embedding_image(const GFContext& small, const GFContext& big) {
  static std::mutex mu;
  static std::map<std::pair<const GFContext*, const GFContext*>, GF> cache;
  if (small.p != big.p || big.degree % small.degree != 0)
    throw DomainError("no embedding of GF(" + std::to_string(small.p) + "^" + std::to_string(small.degree) + ") into GF(" +
                      std::to_string(big.p) + "^" + std::to_string(big.degree) + ")");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({&small, &big});
    if (it != cache.end()) return it->second;
  }
  std::vector<GF> mc;
  for (auto c : small.modulus) mc.emplace_back(big, static_cast<long>(c));
  const auto rs = roots(GFPoly(GF(big), mc), 0x5eed);
  if (rs.empty()) throw DomainError("field modulus has no root in the larger field");
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(&small, &big), rs.front());
  return rs.front();
}

inline GF embed(const GF& a, const GFContext& big) {
  const GFContext& small = a.field();
  if (&small == &big) return a;
  if (small.degree == 1) return GF(big, static_cast<long>(a.coeffs()[0]));
  const GF g = embedding_image(small, big);
  GF r(big), pw = GF(big, 1L);
  for (auto c : a.coeffs()) {
    if (c != 0) r = r + pw * GF(big, static_cast<long>(c));
    pw = pw * g;
  }
  return r;
}

inline GFPoly lift(const GFPoly& f, const GFContext& big) {
  std::vector<GF> v;
  for (const auto& c : f.coeffs()) v.push_back(embed(c, big));
  return GFPoly(GF(big), std::move(v));
}

// Preimage of a under the embedding small -> field(a), if it exists.
inline std::optional<GF> descend(const GF& a, const GFContext& small) {
  const GFContext& big = a.field();
  if (&small == &big) return a;
  if (small.degree == 1) {
    if (!a.is_prime_field_element()) return std::nullopt;
    return GF(small, static_cast<long>(a.coeffs()[0]));
  }
  const GF g = embedding_image(small, big);
  const GF fp(prime_field(big.p));
  // Columns: coordinates of g^i for i < k, then a.
  Matrix<GF> m(static_cast<std::size_t>(big.degree), std::vector<GF>(static_cast<std::size_t>(small.degree) + 1, fp));
  GF pw(big, 1L);
  for (int i = 0; i <= small.degree; ++i) {
    const GF& col = (i == small.degree) ? a : pw;
    for (int r = 0; r < big.degree; ++r) m[r][i] = GF(prime_field(big.p), static_cast<long>(col.coeffs()[r]));
    pw = pw * g;
  }
  const auto ns = nullspace(m, fp);
  for (const auto& v : ns) {
    if (v.back().is_zero()) continue;
    const GF s = -(v.back().inv());
    std::vector<std::uint32_t> coeffs;
    for (int i = 0; i < small.degree; ++i) coeffs.push_back((v[i] * s).coeffs()[0]);
    return GF(small, coeffs);
  }
  return std::nullopt;
}

// Least d | [F:F_p] with a in F_{p^d}.
inline int min_field_degree(const GF& a) {
  const int k = a.field().degree;
  for (int d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    if (a.frobenius(d) == a) return d;
  }
  return k;
}

}  // namespace ecsec
