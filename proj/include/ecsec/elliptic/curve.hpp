#pragma once

#include <ostream>
#include <string>
#include <utility>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/field.hpp"
#include "ecsec/arith/gf.hpp"
#include "ecsec/arith/integer.hpp"

namespace ecsec {

// Either the identity O or an affine point (x, y).
template <FieldElement F>
struct Point {
  bool infinity = true;
  F x{}, y{};

  static Point identity() { return Point{}; }
  static Point affine(F x, F y) { return Point{false, std::move(x), std::move(y)}; }

  friend bool operator==(const Point& a, const Point& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  std::string str() const { return infinity ? std::string("O") : "(" + x.str() + ", " + y.str() + ")"; }
};

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
template <FieldElement F>
class Curve {
 public:
  Curve(F a1, F a2, F a3, F a4, F a6)
      : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
    const F two = a1_.from_int(2), four = a1_.from_int(4);
    b2_ = a1_ * a1_ + four * a2_;
    b4_ = two * a4_ + a1_ * a3_;
    b6_ = a3_ * a3_ + four * a6_;
    b8_ = a1_ * a1_ * a6_ + four * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    c4_ = b2_ * b2_ - a1_.from_int(24) * b4_;
    disc_ = -b2_ * b2_ * b8_ - a1_.from_int(8) * b4_ * b4_ * b4_ - a1_.from_int(27) * b6_ * b6_ +
            a1_.from_int(9) * b2_ * b4_ * b6_;
    if (disc_.is_zero()) throw DomainError("singular curve: discriminant " + disc_.str() + " vanishes");
  }

  const F& a1() const { return a1_; }
  const F& a2() const { return a2_; }
  const F& a3() const { return a3_; }
  const F& a4() const { return a4_; }
  const F& a6() const { return a6_; }
  const F& b2() const { return b2_; }
  const F& b4() const { return b4_; }
  const F& b6() const { return b6_; }
  const F& b8() const { return b8_; }
  const F& c4() const { return c4_; }
  const F& discriminant() const { return disc_; }
  F j_invariant() const { return c4_ * c4_ * c4_ / disc_; }
  F zero() const { return a1_.zero(); }

  bool contains(const Point<F>& p) const {
    if (p.infinity) return true;
    return p.y * p.y + a1_ * p.x * p.y + a3_ * p.y == ((p.x + a2_) * p.x + a4_) * p.x + a6_;
  }

  Point<F> negate(const Point<F>& p) const {
    if (p.infinity) return p;
    return Point<F>::affine(p.x, -p.y - a1_ * p.x - a3_);
  }

  // Slope and intercept of the line y = lambda x + nu through p and q
  // (tangent when equal); false when that line is vertical.
  bool line(const Point<F>& p, const Point<F>& q, F& lambda, F& nu) const {
    if (p.x == q.x) {
      const F den = p.y + p.y + a1_ * p.x + a3_;
      if (!(p.y == q.y) || den.is_zero()) return false;
      const F three = a1_.from_int(3), two = a1_.from_int(2);
      lambda = (three * p.x * p.x + two * a2_ * p.x + a4_ - a1_ * p.y) / den;
      nu = (-p.x * p.x * p.x + a4_ * p.x + two * a6_ - a3_ * p.y) / den;
      return true;
    }
    const F dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
    return true;
  }

  Point<F> add(const Point<F>& p, const Point<F>& q) const {
    if (p.infinity) return q;
    if (q.infinity) return p;
    F lambda, nu;
    if (!line(p, q, lambda, nu)) return Point<F>::identity();
    const F x3 = lambda * lambda + a1_ * lambda - a2_ - p.x - q.x;
    const F y3 = -(lambda + a1_) * x3 - nu - a3_;
    return Point<F>::affine(x3, y3);
  }

  Point<F> sub(const Point<F>& p, const Point<F>& q) const { return add(p, negate(q)); }

  Point<F> mul(Integer n, Point<F> p) const {
    if (n < 0) {
      n = -n;
      p = negate(p);
    }
    Point<F> r = Point<F>::identity();
    const std::size_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = add(r, r);
      if (mpz_tstbit(n.get_mpz_t(), i)) r = add(r, p);
    }
    return r;
  }
  Point<F> mul(long n, const Point<F>& p) const { return mul(Integer(n), p); }

  // Images of the coefficients under a field map.
  template <class Map>
  auto mapped(Map map) const -> Curve<decltype(map(std::declval<const F&>()))> {
    return {map(a1_), map(a2_), map(a3_), map(a4_), map(a6_)};
  }

  std::string str() const {
    return "[" + a1_.str() + ", " + a2_.str() + ", " + a3_.str() + ", " + a4_.str() + ", " + a6_.str() + "]";
  }

 private:
  F a1_, a2_, a3_, a4_, a6_;
  F b2_, b4_, b6_, b8_, c4_, disc_;
};

// A curve with the given j-invariant. Twists are irrelevant to every quantity
// computed here, so one fixed model per j is used.
template <FieldElement F>
Curve<F> curve_from_j(const F& j, long characteristic) {
  const F z = j.zero(), one = j.one();
  if (characteristic == 2 && j.is_zero()) return Curve<F>(z, z, one, z, z);      // y^2 + y = x^3
  if (characteristic == 3 && j.is_zero()) return Curve<F>(z, z, z, -one, z);     // y^2 = x^3 - x
  if (j.is_zero()) return Curve<F>(z, z, z, z, one);                              // y^2 = x^3 + 1
  const F k1728 = j.from_int(1728);
  if (j == k1728) return Curve<F>(z, z, z, one, z);                               // y^2 = x^3 + x
  const F d = (j - k1728).inv();
  return Curve<F>(one, z, z, -j.from_int(36) * d, -d);  // y^2 + xy = x^3 - 36/(j-1728) x - 1/(j-1728)
}

inline Curve<GF> curve_from_j(const GF& j) { return curve_from_j(j, j.characteristic()); }

}  // namespace ecsec
