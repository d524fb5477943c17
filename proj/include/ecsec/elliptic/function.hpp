#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/integer.hpp"
#include "ecsec/arith/poly.hpp"
#include "ecsec/elliptic/curve.hpp"

namespace ecsec {

// Element (a(x) + b(x) y) / d(x) of the function field of a Weierstrass
// curve, where y^2 = -A(x) y + B(x) with A = a1 x + a3 and
// B = x^3 + a2 x^2 + a4 x + a6. The canonical form has gcd(a, b, d) = 1 and d
// monic, so regular functions on the affine part have d = 1.
template <FieldElement F>
class CurveFunction {
 public:
  CurveFunction(const Curve<F>& e, Poly<F> a, Poly<F> b, Poly<F> d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    set_curve(e);
    if (d_.is_zero()) throw DomainError("curve function with zero denominator");
    normalize();
  }
  CurveFunction(const Curve<F>& e, Poly<F> a, Poly<F> b)
      : CurveFunction(e, std::move(a), std::move(b), Poly<F>::constant(e.zero().one())) {}

  static CurveFunction constant(const Curve<F>& e, const F& c) {
    return CurveFunction(e, Poly<F>::constant(c), Poly<F>(e.zero()));
  }
  // x - x0
  static CurveFunction vertical(const Curve<F>& e, const F& x0) {
    const F z = e.zero();
    return CurveFunction(e, Poly<F>(z, {-x0, z.one()}), Poly<F>(z));
  }
  // y - lambda x - nu
  static CurveFunction chord(const Curve<F>& e, const F& lambda, const F& nu) {
    const F z = e.zero();
    return CurveFunction(e, Poly<F>(z, {-nu, -lambda}), Poly<F>::constant(z.one()));
  }

  const Poly<F>& a() const { return a_; }
  const Poly<F>& b() const { return b_; }
  const Poly<F>& d() const { return d_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_polynomial() const { return d_.degree() == 0; }

  friend CurveFunction operator*(const CurveFunction& f, const CurveFunction& g) {
    // (a1 + b1 y)(a2 + b2 y) = (a1 a2 + b1 b2 B) + (a1 b2 + a2 b1 - b1 b2 A) y
    const Poly<F> bb = f.b_ * g.b_;
    return CurveFunction(f, f.a_ * g.a_ + bb * f.B_, f.a_ * g.b_ + g.a_ * f.b_ - bb * f.A_, f.d_ * g.d_);
  }
  friend CurveFunction operator+(const CurveFunction& f, const CurveFunction& g) {
    return CurveFunction(f, f.a_ * g.d_ + g.a_ * f.d_, f.b_ * g.d_ + g.b_ * f.d_, f.d_ * g.d_);
  }
  friend CurveFunction operator-(const CurveFunction& f, const CurveFunction& g) {
    return CurveFunction(f, f.a_ * g.d_ - g.a_ * f.d_, f.b_ * g.d_ - g.b_ * f.d_, f.d_ * g.d_);
  }

  // Norm to F(x): (a + b y)(a - b A - b y) = a^2 - a b A - b^2 B.
  Poly<F> norm_numerator() const { return a_ * a_ - a_ * b_ * A_ - b_ * b_ * B_; }

  CurveFunction inv() const {
    if (is_zero()) throw NotInvertible("inverse of the zero function");
    const Poly<F> n = norm_numerator();
    return CurveFunction(*this, (a_ - b_ * A_) * d_, -(b_ * d_), n);
  }
  friend CurveFunction operator/(const CurveFunction& f, const CurveFunction& g) { return f * g.inv(); }

  CurveFunction scaled(const F& c) const { return CurveFunction(*this, a_.scaled(c), b_.scaled(c), d_); }

  // Value at an affine point where the denominator does not vanish.
  F eval(const Point<F>& p) const {
    if (p.infinity) throw DomainError("evaluation of a curve function at O");
    const F den = d_.eval(p.x);
    if (den.is_zero()) throw NotInvertible("curve function denominator vanishes at " + p.str());
    return (a_.eval(p.x) + b_.eval(p.x) * p.y) / den;
  }

  friend bool operator==(const CurveFunction& f, const CurveFunction& g) {
    return f.a_ == g.a_ && f.b_ == g.b_ && f.d_ == g.d_;
  }

  std::string str() const {
    std::string s = "(" + a_.str() + ") + (" + b_.str() + ")*y";
    if (!is_polynomial()) s = "(" + s + ")/(" + d_.str() + ")";
    return s;
  }

 private:
  // Shares the curve data of another function.
  CurveFunction(const CurveFunction& like, Poly<F> a, Poly<F> b, Poly<F> d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)), A_(like.A_), B_(like.B_) {
    if (d_.is_zero()) throw DomainError("curve function with zero denominator");
    normalize();
  }

  void set_curve(const Curve<F>& e) {
    const F z = e.zero();
    A_ = Poly<F>(z, {e.a3(), e.a1()});
    B_ = Poly<F>(z, {e.a6(), e.a4(), e.a2(), z.one()});
  }

  void normalize() {
    if (a_.is_zero() && b_.is_zero()) {
      d_ = Poly<F>::constant(d_.proto().one());
      return;
    }
    Poly<F> g = Poly<F>::gcd(Poly<F>::gcd(a_, b_), d_);
    if (g.degree() > 0) {
      a_ = a_ / g;
      b_ = b_ / g;
      d_ = d_ / g;
    }
    const F li = d_.lc().inv();
    a_ = a_.scaled(li);
    b_ = b_.scaled(li);
    d_ = d_.scaled(li);
  }

  Poly<F> a_, b_, d_;
  Poly<F> A_, B_;
};

// Line through p and q divided by the vertical at p + q; a function with
// divisor (p) + (q) - (p + q) - (O).
template <FieldElement F>
CurveFunction<F> miller_step(const Curve<F>& e, const Point<F>& p, const Point<F>& q) {
  const F one = e.zero().one();
  if (p.infinity || q.infinity) return CurveFunction<F>::constant(e, one);
  F lambda, nu;
  if (!e.line(p, q, lambda, nu)) return CurveFunction<F>::vertical(e, p.x);
  const Point<F> s = e.add(p, q);
  return CurveFunction<F>::chord(e, lambda, nu) / CurveFunction<F>::vertical(e, s.x);
}

// The function with divisor N (P) - N (O) for P of exact order N, by
// double-and-add over the bits of N, in canonical form.
template <FieldElement F>
CurveFunction<F> miller_section(const Curve<F>& e, const Point<F>& p, int n) {
  const F one = e.zero().one();
  if (p.infinity) return CurveFunction<F>::constant(e, one);
  if (n < 1) throw DomainError("section order must be positive");
  CurveFunction<F> f = CurveFunction<F>::constant(e, one);
  Point<F> t = p;
  int top = 31;
  while (!((n >> top) & 1)) --top;
  for (int i = top - 1; i >= 0; --i) {
    f = f * f * miller_step(e, t, t);
    t = e.add(t, t);
    if ((n >> i) & 1) {
      f = f * miller_step(e, t, p);
      t = e.add(t, p);
    }
  }
  if (!t.infinity) throw DomainError("point " + p.str() + " does not have order dividing " + std::to_string(n));
  Point<F> multiple = p;
  for (int k = 1; k < n; ++k) {
    if (multiple.infinity)
      throw DomainError("point " + p.str() + " has order " + std::to_string(k) + ", not " + std::to_string(n));
    multiple = e.add(multiple, p);
  }
  if (!f.is_polynomial()) throw DomainError("section has poles away from O");
  return f;
}

// Coordinates in the basis x^0..x^{(N-1)/2}, y x^0..y x^{(N-3)/2} of L(N O);
// throws when f fails the degree certificate for that space.
template <FieldElement F>
std::vector<F> section_coordinates(const CurveFunction<F>& f, int n) {
  const int da = n / 2, db = (n - 3) / 2;
  if (!f.is_polynomial() || f.a().degree() > da || f.b().degree() > db)
    throw DomainError("function " + f.str() + " is not in L(" + std::to_string(n) + " O)");
  std::vector<F> v;
  for (int i = 0; i <= da; ++i) v.push_back(f.a().coeff(i));
  for (int i = 0; i <= db; ++i) v.push_back(f.b().coeff(i));
  return v;
}

}  // namespace ecsec
