#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/integer.hpp"

namespace ecsec {

// Exact element of Q, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  // Accepts "a", "-a", "a/b".
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  }

  const mpq_class& value() const { return v_; }
  Integer num() const { return v_.get_num(); }
  Integer den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(long n) const { return Rational(n); }
  Rational from_integer(const Integer& n) const { return Rational(n); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational inv() const {
    if (is_zero()) throw NotInvertible("inverse of rational zero");
    return Rational(mpq_class(1) / v_);
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw NotInvertible("division by rational zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rational r(1), b = *this;
    while (e > 0) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  std::string str() const { return v_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

}  // namespace ecsec
