#pragma once

#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/matrix.hpp"
#include "ecsec/arith/poly.hpp"
#include "ecsec/arith/series.hpp"

namespace ecsec {

// prod_{n >= 1} (1 - q^n) + O(q^prec).
inline QSeries euler_product(int prec) {
  QSeries r = QSeries::from_coeffs(Rational(), 0, {Rational(1)}, prec);
  for (int n = 1; n < prec; ++n) r = r.mul_binomial(Rational(-1), n);
  return r;
}

// Hauptmodul of X_0(N) for N - 1 dividing 12:
// t = N^{12/(N-1)} q prod ((1 - q^{N n}) / (1 - q^n))^{24/(N-1)}.
inline QSeries hauptmodul_t(int n, int prec) {
  if (n < 2 || 12 % (n - 1) != 0) throw DomainError("no eta-quotient Hauptmodul for N = " + std::to_string(n));
  const QSeries e = euler_product(prec);
  const QSeries ratio = e.inflated(n).truncated(prec) / e;
  const Rational scale = field_pow(Rational(n), 12 / (n - 1));
  return ratio.pow(24 / (n - 1)).scaled(scale).shifted(1);
}

// j = E4^3 / Delta.
inline QSeries j_series(int prec) {
  std::vector<Rational> e4{Rational(1)};
  for (long k = 1; k < prec + 1; ++k) {
    long s3 = 0;
    for (long d = 1; d <= k; ++d)
      if (k % d == 0) s3 += d * d * d;
    e4.emplace_back(240 * s3);
  }
  const QSeries E4 = QSeries::from_coeffs(Rational(), 0, std::move(e4), prec + 1);
  const QSeries delta = euler_product(prec + 1).pow(24).shifted(1);
  return E4.pow(3) / delta;
}

// j Q(t) = P(t) with deg P <= N + 1 and Q monic of degree <= N.
struct JRelation {
  QPoly p, q;
};

inline JRelation fit_j_in_t(int n, const QSeries& t, const QSeries& j) {
  const int dp = n + 1, dq = n;
  std::vector<QSeries> tp{QSeries::one(Rational())};
  for (int k = 1; k <= dp; ++k) tp.push_back(tp.back() * t);
  // Columns: p_0..p_dp, then q_0..q_dq; rows: coefficients of P(t) - j Q(t).
  const int cols = dp + 1 + dq + 1;
  std::vector<QSeries> col;
  for (int k = 0; k <= dp; ++k) col.push_back(tp[k]);
  for (int k = 0; k <= dq; ++k) col.push_back(-(j * tp[k]));
  int top = j.precision();
  for (const auto& c : col)
    if (!c.is_exact()) top = std::min(top, c.precision());
  if (top - 1 < cols + 4) throw PrecisionError("precision too low to fit j in t");
  Matrix<Rational> m;
  for (int e = -1; e < top; ++e) {
    std::vector<Rational> row;
    for (const auto& c : col) row.push_back(c.coeff(e));
    m.push_back(std::move(row));
  }
  const auto ns = nullspace(m, Rational());
  if (ns.size() != 1) throw DomainError("j is not a unique rational function of t of the expected degrees");
  const auto& v = ns[0];
  QPoly p(Rational(), std::vector<Rational>(v.begin(), v.begin() + dp + 1));
  QPoly q(Rational(), std::vector<Rational>(v.begin() + dp + 1, v.end()));
  const Rational lc = q.lc();
  return {p.scaled(lc.inv()), q.scaled(lc.inv())};
}

}  // namespace ecsec
