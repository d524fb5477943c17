#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/integer.hpp"
#include "ecsec/arith/rational.hpp"

namespace ecsec {

// Element of Q(zeta_N) = Q[z]/Phi_N(z) for an odd prime N, stored as integer
// coefficients over a common positive denominator in the basis 1, z, ..., z^{N-2}.
// Phi_N = 1 + z + ... + z^{N-1}, so z^{N-1} = -(1 + ... + z^{N-2}).
class Cyclotomic {
 public:
  // Unbound zero; adopts the level of the other operand.
  Cyclotomic() = default;
  explicit Cyclotomic(int level) : n_(level), num_(level - 1), den_(1) { check_level(level); }
  Cyclotomic(int level, const Rational& r) : Cyclotomic(level) {
    num_[0] = r.num();
    den_ = r.den();
  }

  // z^k, reduced.
  static Cyclotomic zeta(int level, long k = 1) {
    Cyclotomic r(level);
    long e = k % level;
    if (e < 0) e += level;
    if (e == level - 1) {
      for (auto& c : r.num_) c = -1;
    } else {
      r.num_[e] = 1;
    }
    return r;
  }

  // Reduces an arbitrary polynomial in z (coefficients low degree first).
  static Cyclotomic from_poly(int level, const std::vector<Rational>& coeffs) {
    std::vector<Rational> folded(level);
    for (std::size_t i = 0; i < coeffs.size(); ++i) folded[i % level] += coeffs[i];
    Cyclotomic r(level);
    Integer l = 1;
    for (auto& c : folded) l = ilcm(l, c.den());
    const Rational top = folded[level - 1];
    for (int i = 0; i < level - 1; ++i) {
      Rational v = (folded[i] - top) * Rational(l);
      r.num_[i] = v.num();
    }
    r.den_ = l;
    r.normalize();
    return r;
  }

  int level() const { return n_; }
  bool bound() const { return n_ != 0; }
  Rational coeff(int i) const {
    if (!bound() || i < 0 || i >= n_ - 1) return Rational();
    return Rational(num_[i], den_);
  }
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
      if (num_[i] != 0) return false;
    return true;
  }
  Rational rational_part() const {
    if (!is_rational()) throw DomainError("cyclotomic element " + str() + " is not rational");
    if (!bound()) return Rational();
    return Rational(num_[0], den_);
  }

  Cyclotomic zero() const { return Cyclotomic(level_or_throw()); }
  Cyclotomic one() const { return Cyclotomic(level_or_throw(), Rational(1)); }
  Cyclotomic from_int(long n) const { return Cyclotomic(level_or_throw(), Rational(n)); }
  Cyclotomic from_integer(const Integer& n) const { return Cyclotomic(level_or_throw(), Rational(n)); }
  Cyclotomic from_rational(const Rational& q) const { return Cyclotomic(level_or_throw(), q); }

  bool is_zero() const {
    for (const auto& c : num_)
      if (c != 0) return false;
    return true;
  }

  // The automorphism z -> z^a, gcd(a, N) = 1.
  Cyclotomic galois(long a) const {
    if (!bound()) return *this;
    long s = a % n_;
    if (s < 0) s += n_;
    if (s == 0) throw DomainError("Galois exponent divisible by the level");
    std::vector<Integer> full(n_);
    for (int i = 0; i < n_ - 1; ++i) full[(static_cast<long>(i) * s) % n_] += num_[i];
    Cyclotomic r(n_);
    for (int i = 0; i < n_ - 1; ++i) r.num_[i] = full[i] - full[n_ - 1];
    r.den_ = den_;
    r.normalize();
    return r;
  }

  Rational norm() const {
    Cyclotomic prod = *this;
    for (int a = 2; a < n_; ++a) prod = prod * galois(a);
    return prod.rational_part();
  }

  Cyclotomic inv() const {
    if (is_zero()) throw NotInvertible("inverse of cyclotomic zero");
    if (is_rational()) return Cyclotomic(n_, rational_part().inv());
    Cyclotomic conj = one();
    for (int a = 2; a < n_; ++a) conj = conj * galois(a);
    const Rational nrm = (*this * conj).rational_part();
    return conj.scaled(nrm.inv());
  }

  Cyclotomic scaled(const Rational& q) const {
    if (!bound()) return *this;
    Cyclotomic r = *this;
    for (auto& c : r.num_) c *= q.num();
    r.den_ *= q.den();
    r.normalize();
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b, false); }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b, true); }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (!a.bound()) return a;
    if (!b.bound()) return b;
    check_same(a, b);
    if (b.is_rational()) return a.scaled_integer(b.num_[0], b.den_);
    if (a.is_rational()) return b.scaled_integer(a.num_[0], a.den_);
    const int n = a.n_;
    std::vector<Integer> full(n);
    for (int i = 0; i < n - 1; ++i) {
      if (a.num_[i] == 0) continue;
      for (int j = 0; j < n - 1; ++j) {
        if (b.num_[j] == 0) continue;
        const int k = (i + j) % n;
        mpz_addmul(full[k].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
      }
    }
    Cyclotomic r(n);
    for (int i = 0; i < n - 1; ++i) r.num_[i] = full[i] - full[n - 1];
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
  }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inv(); }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (!a.bound() || !b.bound()) return a.is_zero() && b.is_zero();
    return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  std::string str() const {
    std::string s;
    for (int i = 0; i < n_ - 1; ++i) {
      if (num_[i] == 0) continue;
      Rational c(num_[i], den_);
      std::string cs = c.str();
      if (!s.empty()) {
        if (c.sign() < 0) {
          s += " - ";
          cs = (-c).str();
        } else {
          s += " + ";
        }
      }
      if (i == 0)
        s += cs;
      else
        s += (cs == "1" ? "" : (cs == "-1" ? "-" : cs + "*")) + (i == 1 ? std::string("z") : "z^" + std::to_string(i));
    }
    return s.empty() ? "0" : s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.str(); }

 private:
  static void check_level(int level) {
    if (level < 3 || !is_prime_u32(static_cast<std::uint32_t>(level)))
      throw DomainError("cyclotomic level must be an odd prime, got " + std::to_string(level));
  }
  static void check_same(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ != b.n_) throw DomainError("mixing cyclotomic levels");
  }
  int level_or_throw() const {
    if (!bound()) throw DomainError("unbound cyclotomic element");
    return n_;
  }

  Cyclotomic scaled_integer(const Integer& num, const Integer& den) const {
    Cyclotomic r = *this;
    for (auto& c : r.num_) c *= num;
    r.den_ *= den;
    r.normalize();
    return r;
  }

  static Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b, bool subtract) {
    if (!b.bound()) return a;
    if (!a.bound()) return subtract ? -b : b;
    check_same(a, b);
    Cyclotomic r(a.n_);
    if (a.den_ == b.den_) {
      for (int i = 0; i < a.n_ - 1; ++i) r.num_[i] = subtract ? Integer(a.num_[i] - b.num_[i]) : Integer(a.num_[i] + b.num_[i]);
      r.den_ = a.den_;
    } else {
      const Integer l = ilcm(a.den_, b.den_);
      const Integer ma = l / a.den_, mb = l / b.den_;
      for (int i = 0; i < a.n_ - 1; ++i) {
        r.num_[i] = a.num_[i] * ma;
        if (subtract)
          mpz_submul(r.num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), mb.get_mpz_t());
        else
          mpz_addmul(r.num_[i].get_mpz_t(), b.num_[i].get_mpz_t(), mb.get_mpz_t());
      }
      r.den_ = l;
    }
    r.normalize();
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : num_) c = -c;
    }
    if (den_ == 1) return;
    Integer g = den_;
    for (const auto& c : num_) {
      if (c == 0) continue;
      g = igcd(g, c);
      if (g == 1) return;
    }
    if (is_zero()) {
      den_ = 1;
      return;
    }
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }

  int n_ = 0;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

}  // namespace ecsec
