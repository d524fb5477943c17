#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/field.hpp"
#include "ecsec/arith/poly.hpp"

namespace ecsec {

// Truncated Laurent series sum_{n >= v} c_n q^n + O(q^prec) over a field.
// Coefficients of q^n with n >= prec are unknown and reading them throws.
// An exact series is a Laurent polynomial with no error term.
template <FieldElement F>
class LaurentSeries {
 public:
  LaurentSeries() = default;
  // O(q^prec)
  LaurentSeries(const F& proto, int prec) : zero_(proto.zero()), v_(prec), prec_(prec) {}

  // sum_i coeffs[i] q^{v+i} + O(q^prec); coefficients at or beyond prec are dropped.
  static LaurentSeries from_coeffs(const F& proto, int v, std::vector<F> coeffs, int prec) {
    LaurentSeries s(proto, prec);
    if (v < prec) {
      if (coeffs.size() > static_cast<std::size_t>(prec - v)) coeffs.resize(static_cast<std::size_t>(prec - v));
      s.v_ = v;
      s.c_ = std::move(coeffs);
      s.normalize();
    }
    return s;
  }
  // Laurent polynomial sum_i coeffs[i] q^{v+i} with no error term.
  static LaurentSeries exact(const F& proto, int v, std::vector<F> coeffs) {
    LaurentSeries s(proto, 0);
    s.exact_ = true;
    s.v_ = v;
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
  }
  static LaurentSeries monomial(const F& c, int k) { return exact(c, k, {c}); }
  static LaurentSeries one(const F& proto) { return monomial(proto.one(), 0); }
  // The exact series of a polynomial in q.
  static LaurentSeries from_poly(const Poly<F>& p) { return exact(p.proto(), 0, p.coeffs()); }

  const F& proto() const { return zero_; }
  bool is_exact() const { return exact_; }
  // Identically zero to the known precision.
  bool is_zero() const { return c_.empty(); }
  // Valuation; for a zero series this is its precision (a lower bound).
  int valuation() const { return v_; }
  int precision() const {
    if (exact_) throw PrecisionError("exact series has unbounded precision");
    return prec_;
  }
  // Number of known coefficients starting at the valuation.
  int relative_precision() const { return exact_ ? kUnbounded : prec_ - v_; }
  const std::vector<F>& raw() const { return c_; }

  F coeff(int n) const {
    if (!exact_ && n >= prec_)
      throw PrecisionError("coefficient of q^" + std::to_string(n) + " requested beyond precision " + std::to_string(prec_));
    if (n < v_ || n - v_ >= static_cast<int>(c_.size())) return zero_;
    return c_[n - v_];
  }
  F leading() const {
    if (is_zero()) throw PrecisionError("leading coefficient of a series that vanishes to its precision");
    return c_[0];
  }

  // Drops all information at q^prec and beyond.
  LaurentSeries truncated(int prec) const {
    if (!exact_ && prec >= prec_) return *this;
    LaurentSeries r(zero_, prec);
    if (v_ < prec) {
      r.v_ = v_;
      r.c_.assign(c_.begin(), c_.begin() + std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(c_.size()), prec - v_));
      r.normalize();
    }
    return r;
  }

  // Multiplication by q^k.
  LaurentSeries shifted(int k) const {
    LaurentSeries r = *this;
    r.v_ += k;
    if (!exact_) r.prec_ += k;
    return r;
  }

  // q -> q^s, s >= 1.
  LaurentSeries inflated(int s) const {
    if (s < 1) throw DomainError("inflation factor must be positive");
    LaurentSeries r(zero_, exact_ ? 0 : prec_ * s);
    r.exact_ = exact_;
    if (is_zero()) {
      r.v_ = exact_ ? 0 : prec_ * s;
      return r;
    }
    r.v_ = v_ * s;
    r.c_.assign((c_.size() - 1) * static_cast<std::size_t>(s) + 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * s] = c_[i];
    if (!exact_) r = r.truncated(r.prec_);
    return r;
  }

  LaurentSeries scaled(const F& a) const {
    if (a.is_zero()) return exact_ ? exact(zero_, 0, {}) : LaurentSeries(zero_, prec_);
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = c * a;
    return r;
  }

  template <class Fn>
  auto mapped(Fn fn) const -> LaurentSeries<decltype(fn(std::declval<const F&>()))> {
    using G = decltype(fn(std::declval<const F&>()));
    const G z = fn(zero_);
    std::vector<G> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(fn(c));
    if (exact_) return LaurentSeries<G>::exact(z, v_, std::move(v));
    return LaurentSeries<G>::from_coeffs(z, v_, std::move(v), prec_);
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b, false); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b, true); }
  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const F& z = detail::bound_of(a.zero_, b.zero_);
    if (a.exact_ && b.exact_) {
      if (a.is_zero() || b.is_zero()) return exact(z, 0, {});
      return exact(z, a.v_ + b.v_, convolve(a.c_, b.c_, a.c_.size() + b.c_.size() - 1, z));
    }
    // Zero-to-precision factors.
    if (a.is_zero() || b.is_zero()) {
      int prec;
      if (a.is_zero() && b.is_zero())
        prec = (a.exact_ || b.exact_) ? kUnbounded : a.prec_ + b.prec_;
      else if (a.is_zero())
        prec = a.exact_ ? kUnbounded : a.prec_ + b.v_;
      else
        prec = b.exact_ ? kUnbounded : b.prec_ + a.v_;
      if (prec == kUnbounded) return exact(z, 0, {});
      return LaurentSeries(z, prec);
    }
    const int rel = std::min(a.relative_precision(), b.relative_precision());
    const int v = a.v_ + b.v_;
    return from_coeffs(z, v, convolve(a.c_, b.c_, static_cast<std::size_t>(rel), z), v + rel);
  }
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

  // Multiplication by (1 + a q^e), e >= 1; linear time.
  LaurentSeries mul_binomial(const F& a, int e) const {
    if (e < 1) return *this * exact(zero_, 0, binomial_coeffs(a, e));
    if (is_zero() || a.is_zero()) return *this;
    std::vector<F> r(c_);
    const std::size_t n = exact_ ? c_.size() + e : static_cast<std::size_t>(prec_ - v_);
    r.resize(n, zero_);
    for (std::size_t i = n; i-- > static_cast<std::size_t>(e);)
      if (i - e < c_.size() && !c_[i - e].is_zero()) r[i] = r[i] + a * c_[i - e];
    if (exact_) return exact(zero_, v_, std::move(r));
    return from_coeffs(zero_, v_, std::move(r), prec_);
  }

  // Inverse; the relative precision is preserved. Exact inputs must be monomials.
  LaurentSeries inv() const {
    if (is_zero()) throw NotInvertible("non-invertible series");
    if (exact_) {
      if (c_.size() == 1) return monomial(c_[0].inv(), -v_);
      throw PrecisionError("inverse of an exact series needs a precision; truncate it first");
    }
    const int rel = relative_precision();
    std::vector<F> b(static_cast<std::size_t>(rel), zero_);
    const F a0i = c_[0].inv();
    b[0] = a0i;
    for (int n = 1; n < rel; ++n) {
      F acc = zero_;
      const int top = std::min<int>(n, static_cast<int>(c_.size()) - 1);
      for (int k = 1; k <= top; ++k)
        if (!c_[k].is_zero()) acc = acc + c_[k] * b[n - k];
      b[n] = -(acc * a0i);
    }
    return from_coeffs(zero_, -v_, std::move(b), -v_ + rel);
  }
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) { return a * b.inv(); }

  LaurentSeries pow(long e) const {
    if (e < 0) return inv().pow(-e);
    LaurentSeries r = one(zero_), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e > 0) b = b * b;
    }
    return r;
  }

  // Coefficientwise agreement on the common known range.
  bool agrees_with(const LaurentSeries& o) const {
    int hi;
    if (exact_ && o.exact_)
      hi = std::max(v_ + static_cast<int>(c_.size()), o.v_ + static_cast<int>(o.c_.size()));
    else if (exact_)
      hi = o.prec_;
    else if (o.exact_)
      hi = prec_;
    else
      hi = std::min(prec_, o.prec_);
    const int lo = std::min(v_, o.v_);
    for (int n = lo; n < hi; ++n)
      if (!(coeff(n) == o.coeff(n))) return false;
    return true;
  }

  std::string str(const std::string& var = "q", int max_terms = 8) const {
    std::string s;
    int shown = 0;
    for (std::size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      const int e = v_ + static_cast<int>(i);
      s += "(" + c_[i].str() + ")";
      if (e != 0) s += "*" + var + "^" + std::to_string(e);
      ++shown;
    }
    if (s.empty()) s = "0";
    if (!exact_) s += " + O(" + var + "^" + std::to_string(prec_) + ")";
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) { return os << s.str(); }

 private:
  static constexpr int kUnbounded = 1 << 29;

  static std::vector<F> binomial_coeffs(const F& a, int e) {
    // 1 + a q^e as an exact coefficient list starting at min(0, e).
    if (e == 0) return {a.one() + a};
    std::vector<F> v(static_cast<std::size_t>(-e) + 1, a.zero());
    v[0] = a;
    v[-e] = a.one();
    return v;
  }

  static std::vector<F> convolve(const std::vector<F>& a, const std::vector<F>& b, std::size_t n, const F& z) {
    std::vector<F> r(n, z);
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
      if (a[i].is_zero()) continue;
      const std::size_t top = std::min(b.size(), n - i);
      for (std::size_t j = 0; j < top; ++j)
        if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
    }
    return r;
  }

  static LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b, bool subtract) {
    const F& z = detail::bound_of(a.zero_, b.zero_);
    const bool exact_result = a.exact_ && b.exact_;
    int prec = 0;
    if (!exact_result) prec = a.exact_ ? b.prec_ : (b.exact_ ? a.prec_ : std::min(a.prec_, b.prec_));
    int lo = std::min(a.is_zero() ? kUnbounded : a.v_, b.is_zero() ? kUnbounded : b.v_);
    int hi = std::max(a.v_ + static_cast<int>(a.c_.size()), b.v_ + static_cast<int>(b.c_.size()));
    if (!exact_result) hi = std::min(hi, prec);
    if (lo == kUnbounded || lo >= hi) return exact_result ? exact(z, 0, {}) : LaurentSeries(z, prec);
    std::vector<F> v(static_cast<std::size_t>(hi - lo), z);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      const int n = a.v_ + static_cast<int>(i) - lo;
      if (n >= 0 && n < hi - lo) v[n] = a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      const int n = b.v_ + static_cast<int>(i) - lo;
      if (n >= 0 && n < hi - lo) v[n] = subtract ? v[n] - b.c_[i] : v[n] + b.c_[i];
    }
    if (exact_result) return exact(z, lo, std::move(v));
    return from_coeffs(z, lo, std::move(v), prec);
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
      c_.clear();
      v_ = exact_ ? 0 : prec_;
      return;
    }
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      v_ += static_cast<int>(lead);
    }
    if (exact_)
      while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F zero_{};
  int v_ = 0;
  int prec_ = 0;
  bool exact_ = false;
  std::vector<F> c_;
};

using QSeries = LaurentSeries<Rational>;

}  // namespace ecsec
