#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ecsec/arith/cyclotomic.hpp"
#include "ecsec/arith/error.hpp"
#include "ecsec/arith/field.hpp"
#include "ecsec/arith/rational.hpp"
#include "ecsec/arith/series.hpp"
#include "ecsec/ngon/ngon.hpp"

namespace ecsec {

using CSeries = LaurentSeries<Cyclotomic>;

// theta(v; Q) = (1 - v) prod_{n >= 1} (1 - Q^n v)(1 - Q^n / v) at v = v0 q^k,
// Q = q^s, to absolute precision prec. Factors (1 - c q^e) with e < 0 are
// rewritten as -c q^e (1 - q^{-e} / c).
template <FieldElement F>
LaurentSeries<F> theta_at(const F& v0, int k, int s, int prec) {
  if (v0.is_zero()) throw DomainError("theta needs a nonzero argument");
  if (s < 1) throw DomainError("theta step must be positive");
  const F one = v0.one(), vinv = v0.inv();
  std::vector<std::pair<F, int>> factors{{v0, k}};
  // Factors with exponent s n +- k; only finitely many lie below the precision
  // plus the largest negative exponent.
  const int reach = prec + (k < 0 ? -k : k) + 1;
  for (int n = 1; s * n - (k < 0 ? -k : k) < reach; ++n) {
    factors.emplace_back(v0, s * n + k);
    factors.emplace_back(vinv, s * n - k);
  }
  F scale = one;
  int shift = 0;
  std::vector<std::pair<F, int>> positive;
  for (const auto& [c, e] : factors) {
    if (e > 0) {
      positive.emplace_back(c, e);
    } else if (e == 0) {
      scale = scale * (one - c);
    } else {
      scale = -(scale * c);
      shift += e;
      positive.emplace_back(c.inv(), -e);
    }
  }
  if (scale.is_zero()) return LaurentSeries<F>(one, prec);
  const int inner = prec - shift;
  LaurentSeries<F> r = LaurentSeries<F>::from_coeffs(one, 0, {scale}, inner);
  for (const auto& [c, e] : positive)
    if (e < inner) r = r.mul_binomial(-c, e);
  return r.shifted(shift);
}

// Sum of the q-shifts delta_b = b + n_0 / N of the normalized h_m, where n_0
// is the valuation on Z_0 of the N-gon profile r_0 = -N, r_b = N; the total
// (N-1)(5N-1)/12 is an integer.
inline long gh_shift(int n) {
  Rational total;
  for (int b = 1; b < n; ++b) {
    std::vector<long> r(n, 0);
    r[0] = -n;
    r[b] = n;
    const auto prof = solve_valuations(n, r);
    total += Rational(b) + prof.n[0] / Rational(n);
  }
  if (!total.is_integer()) throw DomainError("fractional total shift " + total.str());
  return total.num().get_si();
}

// A q-expansion attached to the Tate curve at u = u0 for character index m.
struct TateFunctionSeries {
  Cyclotomic u0;
  int m = 0;
  int b = 0;  // (-m) mod N
  CSeries series;
};

inline int twist_exponent(int n, int m) { return ((-m) % n + n) % n; }

// s_O(u, q) = theta(u; q)^N / theta(u^N; q^N).
inline CSeries s_O_at(const Cyclotomic& u, int prec) {
  const int n = u.level();
  const Cyclotomic un = field_pow(u, n);
  if (un == u.one()) throw DomainError("u0^N = 1 is a pole of s_O");
  const CSeries den = theta_at(un, 0, n, prec);
  return theta_at(u, 0, 1, prec).pow(n) / den;
}

inline TateFunctionSeries s_O_series(const Cyclotomic& u0, int prec) {
  return {u0, 0, 0, s_O_at(u0, prec)};
}

// g_m(u0) = sum_j zeta^{m j} s_O(zeta^{-j} u0), computed term by term.
inline TateFunctionSeries g_series(int m, const Cyclotomic& u0, int prec) {
  const int n = u0.level();
  CSeries acc = CSeries::from_coeffs(u0.zero(), 0, {}, prec);
  for (int j = 0; j < n; ++j) {
    const Cyclotomic w = Cyclotomic::zeta(n, -j) * u0;
    acc += s_O_at(w, prec).scaled(Cyclotomic::zeta(n, static_cast<long>(m) * j));
  }
  return {u0, m, twist_exponent(n, m), acc};
}

// h_m(u0) = u0^{-b} theta(u0^N q^{-b}; q^N) / theta(u0^N; q^N), b = (-m) mod N;
// h_0 = 1 exactly.
inline TateFunctionSeries h_series(int m, const Cyclotomic& u0, int prec) {
  const int n = u0.level();
  const int b = twist_exponent(n, m);
  if (b == 0) return {u0, m, 0, CSeries::one(u0.one())};
  const Cyclotomic w = field_pow(u0, n);
  const CSeries num = theta_at(w, -b, n, prec);
  const CSeries den = theta_at(w, 0, n, prec);
  return {u0, m, b, (num / den).scaled(field_pow(u0, -b))};
}

// g_m / h_m over Q(zeta_N).
inline CSeries ratio_series(int m, const Cyclotomic& u0, int prec) {
  return g_series(m, u0, prec).series / h_series(m, u0, prec).series;
}

// g_m / h_m and their product over m != 0 for a rational u0, where every
// g_m is rational: with S = theta(zeta^{-1} u0; q) and D = theta(u0^N; q^N),
// s_O(zeta^{-j} u0) = sigma_j(S^N / D). Coefficients are assembled in
// Q(zeta) and must come out rational.
class TateEngine {
 public:
  TateEngine(int n, const Rational& u0, int prec) : n_(n), u0_(u0), prec_(prec) {
    if (u0.is_zero() || field_pow(u0, n) == Rational(1)) throw DomainError("u0 must be nonzero with u0^N != 1");
    const Cyclotomic cu(n, u0);
    const Rational un = field_pow(u0, n);
    den_ = theta_at(un, 0, n, prec);
    const QSeries den_inv = den_.inv();
    s0_ = theta_at(u0, 0, 1, prec).pow(n) * den_inv;
    const CSeries s = theta_at(Cyclotomic::zeta(n, -1) * cu, 0, 1, prec);
    t_ = s.pow(n) * den_inv.mapped([&](const Rational& q) { return Cyclotomic(n, q); });
  }

  int level() const { return n_; }
  const Rational& u0() const { return u0_; }
  int precision() const { return prec_; }

  const QSeries& g(int m) {
    m = ((m % n_) + n_) % n_;
    auto it = g_.find(m);
    if (it != g_.end()) return it->second;
    const int lo = std::min(s0_.valuation(), t_.valuation());
    std::vector<Rational> c;
    for (int k = lo; k < prec_; ++k) {
      Cyclotomic acc(n_, s0_.coeff(k));
      const Cyclotomic tk = t_.coeff(k);
      if (!tk.is_zero())
        for (int j = 1; j < n_; ++j) acc += tk.galois(j) * Cyclotomic::zeta(n_, static_cast<long>(m) * j);
      if (!acc.is_rational()) throw DomainError("g_" + std::to_string(m) + " has a non-rational coefficient at q^" + std::to_string(k));
      c.push_back(acc.rational_part());
    }
    return g_[m] = QSeries::from_coeffs(Rational(), lo, std::move(c), prec_);
  }

  QSeries h(int m) const {
    const int b = twist_exponent(n_, m);
    if (b == 0) return QSeries::one(Rational());
    const Rational w = field_pow(u0_, n_);
    return (theta_at(w, -b, n_, prec_) / den_).scaled(field_pow(u0_, -b));
  }

  QSeries ratio(int m) { return g(m) / h(m); }

  // G/H = q^{-K} prod_{m=1}^{N-1} g_m / h_m with K from gh_shift.
  QSeries gh() {
    QSeries r = QSeries::one(Rational());
    for (int m = 1; m < n_; ++m) r = r * ratio(m);
    return r.shifted(static_cast<int>(-gh_shift(n_)));
  }

 private:
  int n_;
  Rational u0_;
  int prec_;
  QSeries den_, s0_;
  CSeries t_;
  std::map<int, QSeries> g_;
};

}  // namespace ecsec
