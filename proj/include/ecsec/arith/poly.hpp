#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/field.hpp"
#include "ecsec/arith/gf.hpp"
#include "ecsec/arith/integer.hpp"
#include "ecsec/arith/rational.hpp"

namespace ecsec {

namespace detail {

// Whichever element carries a field (handles unbound defaults).
template <class F>
const F& bound_of(const F& a, const F& b) {
  if constexpr (requires(const F f) { f.bound(); }) {
    if (!a.bound()) return b;
  }
  return a;
}

}  // namespace detail

// Dense univariate polynomial over a field, lowest degree first, no trailing
// zeros. The zero polynomial has degree -1. A prototype element pins the field
// so that constants such as zero() and one() can be produced for any field.
template <FieldElement F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const F& proto) : zero_(proto.zero()) {}
  Poly(const F& proto, std::vector<F> coeffs) : zero_(proto.zero()), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& c) { return Poly(c, {c}); }
  static Poly monomial(const F& c, int degree) {
    std::vector<F> v(static_cast<std::size_t>(degree) + 1, c.zero());
    v[degree] = c;
    return Poly(c, std::move(v));
  }
  static Poly x(const F& proto) { return monomial(proto.one(), 1); }
  // Integer coefficients, lowest degree first.
  static Poly from_ints(const F& proto, const std::vector<long>& coeffs) {
    std::vector<F> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.push_back(proto.from_int(c));
    return Poly(proto, std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const F& proto() const { return zero_; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const { return (i < 0 || i > degree()) ? zero_ : c_[i]; }
  F operator[](int i) const { return coeff(i); }
  F lc() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Poly zero_poly() const { return Poly(zero_); }
  Poly one_poly() const { return constant(zero_.one()); }

  Poly monic() const {
    if (is_zero()) return *this;
    const F li = lc().inv();
    std::vector<F> v(c_);
    for (auto& c : v) c = c * li;
    return Poly(zero_, std::move(v));
  }

  F eval(const F& a) const {
    F r = zero_;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * a + c_[i];
    return r;
  }

  // Evaluation at an element of a possibly different ring via a coefficient map.
  template <class G, class Map>
  G eval_mapped(const G& a, Map map) const {
    G r = a.zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * a + map(c_[i]);
    return r;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return zero_poly();
    std::vector<F> v(c_.size() - 1, zero_);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * zero_.from_int(static_cast<long>(i));
    return Poly(zero_, std::move(v));
  }

  // f(g)
  Poly compose(const Poly& g) const {
    Poly r = zero_poly();
    for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(c_[i]);
    return r;
  }

  Poly scaled(const F& s) const {
    std::vector<F> v(c_);
    for (auto& c : v) c = c * s;
    return Poly(zero_, std::move(v));
  }
  Poly shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<F> v(static_cast<std::size_t>(k), zero_);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(zero_, std::move(v));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const F& z = a.bound_proto(b);
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), z);
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
    return Poly(z, std::move(v));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    std::vector<F> v(c_);
    for (auto& c : v) c = -c;
    return Poly(zero_, std::move(v));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const F& z = a.bound_proto(b);
    if (a.is_zero() || b.is_zero()) return Poly(z);
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, z);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(z, std::move(v));
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  // Euclidean division; b nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    const F& z = a.bound_proto(b);
    if (a.degree() < b.degree()) return {Poly(z), a};
    std::vector<F> rem(a.c_);
    std::vector<F> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, z);
    const F li = b.lc().inv();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
      if (rem[i].is_zero()) continue;
      const F c = rem[i] * li;
      q[i - db] = c;
      for (int j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - c * b.c_[j];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(z, std::move(q)), Poly(z, std::move(rem))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  // Exact division; throws when b does not divide a.
  Poly exact_div(const Poly& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
  }

  // Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  // a^e mod m
  static Poly powmod(Poly a, Integer e, const Poly& m) {
    Poly r = m.one_poly() % m;
    a = a % m;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = (r * r) % m;
      if (mpz_tstbit(e.get_mpz_t(), i)) r = (r * a) % m;
    }
    return r;
  }

  Poly pow(unsigned long e) const {
    Poly r = one_poly(), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e > 0) b = b * b;
    }
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Highest degree first, e.g. "t^2 + 7*t + 7".
  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      const F& c = c_[i];
      if (c.is_zero()) continue;
      std::string cs = c.str();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (cs.find_first_of("+- ") != std::string::npos) {
        cs = "(" + c.str() + ")";
        neg = false;
      }
      if (!s.empty())
        s += neg ? " - " : " + ";
      else if (neg)
        s += "-";
      if (i == 0) {
        s += cs;
        continue;
      }
      if (cs != "1") s += cs + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  const F& bound_proto(const Poly& o) const { return detail::bound_of(zero_, o.zero_); }

  F zero_{};
  std::vector<F> c_;
};

// Res(f, g) by the Euclidean recurrence
// Res(f, g) = (-1)^{mn} lc(g)^{m - deg r} Res(g, r), r = f mod g.
template <FieldElement F>
F resultant(Poly<F> f, Poly<F> g) {
  const F z = detail::bound_of(f.proto(), g.proto());
  if (f.is_zero() && g.is_zero()) throw DomainError("resultant of two zero polynomials");
  if (f.is_zero() || g.is_zero()) return z.zero();
  F acc = z.one();
  while (true) {
    const int m = f.degree(), n = g.degree();
    if (n == 0) return acc * field_pow(g.lc(), m);
    if (m == 0) return acc * field_pow(f.lc(), n);
    Poly<F> r = f % g;
    if (r.is_zero()) return z.zero();
    if ((static_cast<long>(m) * n) % 2 == 1) acc = -acc;
    acc = acc * field_pow(g.lc(), m - r.degree());
    f = std::move(g);
    g = std::move(r);
  }
}

// Disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f).
template <FieldElement F>
F discriminant(const Poly<F>& f) {
  const int d = f.degree();
  if (d < 1) throw DomainError("discriminant of a constant polynomial");
  F r = resultant(f, f.derivative()) / f.lc();
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) r = -r;
  return r;
}

// Exact square root of a polynomial with a square leading coefficient given by
// lc_root (sign choice of the result); throws when f is not a square.
// Characteristic must not be 2.
template <FieldElement F>
Poly<F> poly_sqrt(const Poly<F>& f, const F& lc_root) {
  if (f.is_zero()) return f;
  if (f.degree() % 2 != 0) throw DomainError("odd-degree polynomial is not a square");
  if (!(lc_root * lc_root == f.lc())) throw DomainError("leading coefficient root mismatch");
  const int d = f.degree() / 2;
  const F z = f.proto();
  // Coefficients of s from the top: coefficient of x^{2d-k} in s^2 fixes s_{d-k}.
  std::vector<F> s(static_cast<std::size_t>(d) + 1, z.zero());
  s[d] = lc_root;
  const F two_lc_inv = (lc_root + lc_root).inv();
  for (int k = 1; k <= d; ++k) {
    F acc = f.coeff(2 * d - k);
    for (int i = 1; i < k; ++i) acc = acc - s[d - i] * s[d - k + i];
    s[d - k] = acc * two_lc_inv;
  }
  Poly<F> r(z, s);
  if (!(r * r == f)) throw DomainError("polynomial is not a perfect square");
  return r;
}

// Lagrange interpolation through distinct nodes.
template <FieldElement F>
Poly<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw DomainError("interpolation needs matching nonempty nodes");
  const F z = xs[0].zero();
  Poly<F> result(z);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly<F> basis = Poly<F>::constant(z.one());
    F denom = z.one();
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly<F>(z, {-xs[j], z.one()});
      denom = denom * (xs[i] - xs[j]);
    }
    result = result + basis.scaled(ys[i] / denom);
  }
  return result;
}

using QPoly = Poly<Rational>;
using GFPoly = Poly<GF>;

// Integer multiple of f with coprime integer coefficients and positive leading
// coefficient, returned lowest degree first.
inline std::vector<Integer> primitive_integer(const QPoly& f) {
  if (f.is_zero()) return {};
  Integer l = 1;
  for (const auto& c : f.coeffs()) l = ilcm(l, c.den());
  std::vector<Integer> v;
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    v.push_back(c.num() * (l / c.den()));
    g = igcd(g, v.back());
  }
  if (v.back() < 0) g = -g;
  for (auto& c : v) c /= g;
  return v;
}

inline QPoly primitive_integer_poly(const QPoly& f) {
  std::vector<Rational> v;
  for (const auto& c : primitive_integer(f)) v.emplace_back(c);
  return QPoly(Rational(), std::move(v));
}

inline bool has_integer_coeffs(const QPoly& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_integer()) return false;
  return true;
}

// Reduction of a rational polynomial into a finite field; denominators must be
// units there.
inline GFPoly reduce_mod(const QPoly& f, const GFContext& ctx) {
  std::vector<GF> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    const GF d(ctx, c.den());
    if (d.is_zero()) throw DomainError("denominator vanishes modulo " + std::to_string(ctx.p));
    v.push_back(GF(ctx, c.num()) / d);
  }
  return GFPoly(GF(ctx), std::move(v));
}

}  // namespace ecsec
