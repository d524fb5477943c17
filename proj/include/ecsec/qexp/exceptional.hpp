#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecsec/arith/error.hpp"
#include "ecsec/arith/factor.hpp"
#include "ecsec/arith/ffpoly.hpp"
#include "ecsec/arith/gf.hpp"
#include "ecsec/arith/poly.hpp"
#include "ecsec/qexp/modular.hpp"
#include "ecsec/qexp/theta.hpp"

namespace ecsec {

// The polynomial f of degree <= d with s = f(t), found coefficient by
// coefficient; every coefficient of s - f(t) below the common precision must
// vanish.
inline QPoly recognize_poly(const QSeries& s, const QSeries& t, int d) {
  if (t.valuation() != 1) throw DomainError("the uniformizer must have q-valuation 1");
  const Rational lt = t.coeff(1);
  QSeries residual = s;
  QSeries power = QSeries::one(Rational());
  std::vector<Rational> a;
  for (int k = 0; k <= d; ++k) {
    const Rational c = residual.coeff(k) / field_pow(lt, k);
    a.push_back(c);
    residual = residual - power.scaled(c);
    power = power * t;
  }
  const int top = residual.precision();
  if (top <= d + 1) throw PrecisionError("precision too low to recognize a degree " + std::to_string(d) + " polynomial");
  for (int k = residual.valuation(); k < top; ++k)
    if (!residual.coeff(k).is_zero())
      throw DomainError("series is not a polynomial of degree " + std::to_string(d) + " in t (q^" +
                        std::to_string(k) + ")");
  return QPoly(Rational(), std::move(a));
}

// Res_t(f(t), P(t) - J Q(t)) as a primitive integer polynomial in J.
inline QPoly j_image(const QPoly& f, const JRelation& rel) {
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= f.degree(); ++k) {
    const Rational jv(k);
    xs.push_back(jv);
    ys.push_back(resultant(f, rel.p - rel.q.scaled(jv)));
  }
  return primitive_integer_poly(interpolate(xs, ys));
}

inline int exceptional_precision(int n) {
  const int nn = n * n - 1;
  return nn / 12 + (n - 3) * nn / 24 + 16;
}

struct ExceptionalPolys {
  int n = 0;
  int precision = 0;
  QPoly f1, f2;  // in the Hauptmodul t
  QPoly F1, F2;  // in j
  JRelation relation;
  int gh_valuation = 0;
};

// f1 from g_0, f2 from G/H = c t^{(N^2-1)/12} f2(t)^2, both at u0.
inline ExceptionalPolys compute_exceptional_polys(int n, int prec, const Rational& u0 = Rational(2)) {
  if (n < 5 || 12 % (n - 1) != 0) throw DomainError("exceptional polynomials need N in {5, 7, 13}");
  if (prec < exceptional_precision(n))
    throw PrecisionError("precision " + std::to_string(prec) + " below the required " +
                         std::to_string(exceptional_precision(n)));
  const int nn = n * n - 1;
  ExceptionalPolys out;
  out.n = n;
  out.precision = prec;
  const QSeries t = hauptmodul_t(n, prec + 2);
  TateEngine eng(n, u0, prec);
  out.f1 = recognize_poly(eng.ratio(0), t, nn / 24);
  const QSeries gh = eng.gh();
  out.gh_valuation = gh.valuation();
  const int e = nn / 12;
  if (gh.valuation() != e) throw DomainError("G/H has q-valuation " + std::to_string(gh.valuation()));
  const QSeries cof = gh / t.pow(e);
  const QPoly sq = recognize_poly(cof, t, (n - 3) * nn / 24);
  out.f2 = poly_sqrt(sq.scaled(sq.lc().inv()), Rational(1));
  out.relation = fit_j_in_t(n, t, j_series(prec));
  out.F1 = j_image(out.f1, out.relation);
  out.F2 = j_image(out.f2, out.relation);
  return out;
}

// A prime p < bound with f mod p irreducible of full degree, if any.
inline std::optional<std::uint32_t> irreducibility_witness(const QPoly& f, std::uint32_t bound = 500) {
  const QPoly g = primitive_integer_poly(f);
  if (g.degree() < 1) return std::nullopt;
  for (std::uint32_t p = 2; p < bound; ++p) {
    if (!is_prime_u32(p) || mod_u32(g.lc().num(), p) == 0) continue;
    if (is_irreducible(reduce_mod(g, prime_field(p)))) return p;
  }
  return std::nullopt;
}

struct Invariant {
  std::string name;
  Integer value;
  Factorization factored;
};

inline const std::vector<Integer>& invariant_hints() {
  static const std::vector<Integer> h{43, 139, 421, 591751, 47, 3491, 5939, 244603};
  return h;
}

inline Integer as_integer(const Rational& r) {
  if (!r.is_integer()) throw DomainError("invariant " + r.str() + " is not an integer");
  return r.num();
}

// Constant terms, discriminants and resultants of f1, f2, F1, F2.
inline std::vector<Invariant> invariant_table(const ExceptionalPolys& ex) {
  std::vector<Invariant> out;
  auto add = [&](const std::string& name, const Rational& v) {
    const Integer i = as_integer(v);
    out.push_back({name, i, i == 0 ? Factorization{} : factor_integer(i, invariant_hints())});
  };
  add("f1(0)", ex.f1.coeff(0));
  add("f2(0)", ex.f2.coeff(0));
  if (ex.f1.degree() > 1) add("disc f1", discriminant(ex.f1));
  if (ex.f2.degree() > 1) add("disc f2", discriminant(ex.f2));
  add("res(f1, f2)", resultant(ex.f1, ex.f2));
  if (ex.F1.degree() > 1) add("disc F1", discriminant(ex.F1));
  if (ex.F2.degree() > 1) add("disc F2", discriminant(ex.F2));
  add("res(F1, F2)", resultant(ex.F1, ex.F2));
  return out;
}

}  // namespace ecsec
