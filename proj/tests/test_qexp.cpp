#include <gtest/gtest.h>

#include "ecsec/qexp/exceptional.hpp"

namespace ecsec {
namespace {

QPoly qpoly(const std::vector<long>& c) { return QPoly::from_ints(Rational(), c); }

Cyclotomic cyc(int n, long v) { return Cyclotomic(n, Rational(v)); }

bool all_rational(const CSeries& s) {
  for (int k = s.valuation(); k < s.precision(); ++k)
    if (!s.coeff(k).is_rational()) return false;
  return true;
}

QSeries rational_series(const CSeries& s) {
  return s.mapped([](const Cyclotomic& c) { return c.rational_part(); });
}

Rational gcd_degree(const QPoly& a, const QPoly& b) { return Rational(QPoly::gcd(a, b).degree()); }

TEST(Theta, ConstantTermAndInverse) {
  const QSeries t = theta_at(Rational(2), 0, 1, 10);
  EXPECT_EQ(t.coeff(0), Rational(-1));
  EXPECT_EQ(t.coeff(1), Rational(5, 2));
  const QSeries one = t * t.inv();
  EXPECT_EQ(one.precision(), 10);
  EXPECT_EQ(one.coeff(0), Rational(1));
  for (int k = 1; k < 10; ++k) EXPECT_TRUE(one.coeff(k).is_zero());
}

TEST(Theta, FunctionalEquation) {
  for (long v : {2L, -3L, 7L}) {
    const Rational v0(v);
    const QSeries lhs = theta_at(v0, 1, 1, 20);
    const QSeries rhs = theta_at(v0, 0, 1, 20).scaled(-v0.inv());
    EXPECT_TRUE(lhs.agrees_with(rhs)) << v;
    // Step s: theta(v Q; Q) = -v^{-1} theta(v; Q) with Q = q^3.
    EXPECT_TRUE(theta_at(v0, 3, 3, 30).agrees_with(theta_at(v0, 0, 3, 30).scaled(-v0.inv())));
  }
}

TEST(Theta, ProductOverRootsOfUnity) {
  for (int n : {5, 7}) {
    const Cyclotomic u0 = cyc(n, 2);
    CSeries prod = CSeries::one(u0.one());
    for (int j = 0; j < n; ++j) prod = prod * theta_at(Cyclotomic::zeta(n, j) * u0, 0, 1, 16);
    EXPECT_TRUE(prod.agrees_with(theta_at(field_pow(u0, n), 0, n, 16))) << n;
  }
}

TEST(Theta, ZeroArgumentRejected) { EXPECT_THROW(theta_at(Rational(0), 0, 1, 4), DomainError); }

TEST(TateSeries, SOConstantTermAndProduct) {
  const Cyclotomic u0 = cyc(5, 2);
  const auto s = s_O_series(u0, 12);
  EXPECT_EQ(s.series.valuation(), 0);
  EXPECT_EQ(s.series.coeff(0), cyc(5, 1) * Cyclotomic(5, Rational(1, 31)));
  CSeries prod = CSeries::one(u0.one());
  for (int j = 0; j < 5; ++j) prod = prod * s_O_at(Cyclotomic::zeta(5, -j) * u0, 12);
  EXPECT_EQ(prod.coeff(0), u0.one());
  for (int k = 1; k < prod.precision(); ++k) EXPECT_TRUE(prod.coeff(k).is_zero());
  EXPECT_THROW(s_O_series(Cyclotomic::zeta(5, 2), 4), DomainError);
}

TEST(TateSeries, GConstantTerms) {
  const int n = 5;
  const Cyclotomic u0 = cyc(n, 2);
  const Rational den = Rational(1) - field_pow(Rational(2), n);
  for (int m = 0; m < n; ++m) {
    const auto g = g_series(m, u0, 6);
    Rational expect(n);
    if (m != 0) {
      const Rational sign = m % 2 ? Rational(-1) : Rational(1);
      expect = sign * Rational(n) * Rational(binomial(n, m)) * field_pow(Rational(2), m) / den;
    }
    EXPECT_EQ(g.series.coeff(0), Cyclotomic(n, expect)) << m;
  }
}

TEST(TateSeries, TransformationLaws) {
  for (int n : {5, 7}) {
    const Cyclotomic u0 = cyc(n, 3);
    const Cyclotomic zu = Cyclotomic::zeta(n) * u0;
    for (int m = 0; m < n; ++m) {
      const Cyclotomic zm = Cyclotomic::zeta(n, m);
      EXPECT_TRUE(g_series(m, zu, 8).series.agrees_with(g_series(m, u0, 8).series.scaled(zm))) << n << " " << m;
      EXPECT_TRUE(h_series(m, zu, 8).series.agrees_with(h_series(m, u0, 8).series.scaled(zm))) << n << " " << m;
    }
  }
}

TEST(TateSeries, HValuations) {
  for (int n : {5, 7, 13}) {
    const Cyclotomic u0 = cyc(n, 2);
    EXPECT_TRUE(h_series(0, u0, 4).series.is_exact());
    for (int m = 1; m < n; ++m) {
      const auto h = h_series(m, u0, 4);
      EXPECT_EQ(h.b, (n - m) % n);
      EXPECT_EQ(h.series.valuation(), -h.b) << n << " " << m;
    }
  }
}

TEST(TateSeries, GeneralPathMatchesEngine) {
  const int n = 5, prec = 12;
  TateEngine eng(n, Rational(2), prec);
  for (int m = 0; m < n; ++m) {
    const CSeries g = g_series(m, cyc(n, 2), prec).series;
    ASSERT_TRUE(all_rational(g)) << m;
    EXPECT_TRUE(rational_series(g).agrees_with(eng.g(m))) << m;
    const CSeries r = ratio_series(m, cyc(n, 2), prec);
    EXPECT_TRUE(rational_series(r).agrees_with(eng.ratio(m))) << m;
  }
}

TEST(TateSeries, RatioIndependentOfU) {
  for (int n : {5, 7, 13}) {
    const int prec = n == 13 ? 24 : 32;
    TateEngine a(n, Rational(2), prec), b(n, Rational(-3, 2), prec);
    for (int m = 0; m < n; ++m) EXPECT_TRUE(a.ratio(m).agrees_with(b.ratio(m))) << n << " " << m;
    EXPECT_TRUE(a.gh().agrees_with(b.gh())) << n;
  }
  // Over Q(zeta) with a non-rational u0.
  const Cyclotomic u1 = cyc(5, 1) + Cyclotomic::zeta(5, 2);
  for (int m = 0; m < 5; ++m)
    EXPECT_TRUE(ratio_series(m, u1, 8).agrees_with(ratio_series(m, cyc(5, 2), 8))) << m;
}

TEST(TateSeries, RatioSymmetry) {
  for (int n : {5, 7, 13}) {
    TateEngine eng(n, Rational(2), 24);
    for (int m = 1; m < n; ++m) {
      const int b = twist_exponent(n, m);
      const QSeries q = (eng.ratio(m) / eng.ratio(n - m)).shifted(n - 2 * b);
      EXPECT_EQ(q.valuation(), 0);
      EXPECT_EQ(q.coeff(0), Rational(-1)) << n << " " << m;
      for (int k = 1; k < q.precision(); ++k) EXPECT_TRUE(q.coeff(k).is_zero());
    }
  }
}

TEST(TateSeries, GaloisRationality) {
  const Cyclotomic u0 = cyc(7, 2);
  EXPECT_TRUE(all_rational(ratio_series(0, u0, 10)));
  CSeries gh = CSeries::one(u0.one());
  for (int m = 1; m < 7; ++m) gh = gh * ratio_series(m, u0, 10);
  EXPECT_TRUE(all_rational(gh));
  // A single g_m at a non-rational point is not rational.
  EXPECT_FALSE(all_rational(g_series(1, cyc(7, 1) + Cyclotomic::zeta(7), 4).series));
}

TEST(TateSeries, GHShift) {
  for (int n : {5, 7, 11, 13}) EXPECT_EQ(gh_shift(n), (n - 1) * (5 * n - 1) / 12) << n;
  EXPECT_THROW(gh_shift(3), DomainError);
}

TEST(Modular, HauptmodulAndJ) {
  EXPECT_EQ(hauptmodul_t(5, 4).coeff(1), Rational(125));
  EXPECT_EQ(hauptmodul_t(7, 4).coeff(1), Rational(49));
  EXPECT_EQ(hauptmodul_t(13, 4).coeff(1), Rational(13));
  EXPECT_EQ(hauptmodul_t(5, 4).valuation(), 1);
  EXPECT_THROW(hauptmodul_t(11, 4), DomainError);
  const QSeries j = j_series(4);
  EXPECT_EQ(j.valuation(), -1);
  EXPECT_EQ(j.coeff(-1), Rational(1));
  EXPECT_EQ(j.coeff(0), Rational(744));
  EXPECT_EQ(j.coeff(1), Rational(196884));
  EXPECT_EQ(j.coeff(2), Rational(21493760));
}

TEST(Modular, JFitResidual) {
  for (int n : {5, 7, 13}) {
    const QSeries t = hauptmodul_t(n, 48);
    const QSeries j = j_series(48);
    const JRelation rel = fit_j_in_t(n, t, j);
    EXPECT_EQ(rel.p.degree(), n + 1) << n;
    EXPECT_EQ(rel.q, qpoly({0, 1})) << n;
    QSeries pt(Rational(), 48), qt(Rational(), 48);
    QSeries pw = QSeries::one(Rational());
    for (int k = 0; k <= n + 1; ++k) {
      pt = pt + pw.scaled(rel.p.coeff(k));
      qt = qt + pw.scaled(rel.q.coeff(k));
      pw = pw * t;
    }
    const QSeries res = j * qt - pt;
    for (int k = res.valuation(); k < res.precision(); ++k) EXPECT_TRUE(res.coeff(k).is_zero()) << n << " q^" << k;
  }
}

TEST(Recognize, RoundTrip) {
  const QSeries t = hauptmodul_t(7, 30);
  const QPoly f = qpoly({3, -1, 0, 4});
  QSeries s(Rational(), 30), pw = QSeries::one(Rational());
  for (int k = 0; k <= 3; ++k) {
    s = s + pw.scaled(f.coeff(k));
    pw = pw * t;
  }
  EXPECT_EQ(recognize_poly(s, t, 3), f);
  EXPECT_THROW(recognize_poly(s, t, 2), DomainError);
  EXPECT_THROW(recognize_poly(s.truncated(3), t, 3), PrecisionError);
}

TEST(Exceptional, GoldensFive) {
  const auto ex = compute_exceptional_polys(5, 48);
  EXPECT_EQ(ex.f1, qpoly({5, 1}));
  EXPECT_EQ(ex.f2, qpoly({10, 1}));
  EXPECT_EQ(ex.F1, qpoly({-1600, 1}));
  EXPECT_EQ(ex.F2, qpoly({25, 2}));
  EXPECT_EQ(ex.gh_valuation, 2);
}

TEST(Exceptional, GoldensSeven) {
  const auto ex = compute_exceptional_polys(7, 64);
  EXPECT_EQ(ex.f1, qpoly({7, 7, 1}));
  EXPECT_EQ(ex.f2, qpoly({735, 588, 168, 21, 1}));
  EXPECT_EQ(ex.F1, qpoly({-288000, -1104, 1}));
  const QPoly F2 = QPoly(Rational(), {Rational(Integer("-141176604743")), Rational(Integer("-5403404499")),
                                      Rational(20163177), Rational(-28857), Rational(15)});
  EXPECT_EQ(ex.F2, F2);
  EXPECT_EQ(ex.gh_valuation, 4);
}

TEST(Exceptional, InvariantTableSeven) {
  const auto ex = compute_exceptional_polys(7, 64);
  std::map<std::string, std::string> got;
  for (const auto& iv : invariant_table(ex)) {
    EXPECT_TRUE(iv.factored.complete()) << iv.name;
    EXPECT_EQ(iv.factored.value(), iv.value) << iv.name;
    got[iv.name] = iv.factored.str();
  }
  EXPECT_EQ(got["f1(0)"], "7");
  EXPECT_EQ(got["f2(0)"], "3 * 5 * 7^2");
  EXPECT_EQ(got["disc f1"], "3 * 7");
  EXPECT_EQ(got["disc f2"], "-3^3 * 7^6");
  EXPECT_EQ(got["res(f1, f2)"], "7^4");
  EXPECT_EQ(got["disc F1"], "2^8 * 3^3 * 7^3");
  // Independent computation (sympy discriminant of F2).
  EXPECT_EQ(got["disc F2"], "-3^3 * 7^18 * 43^2 * 139^2 * 421^2 * 591751^2");
  EXPECT_EQ(got["res(F1, F2)"], "5 * 7^12 * 47 * 3491 * 5939 * 244603");
}

TEST(Exceptional, IrreducibleSeven) {
  const auto ex = compute_exceptional_polys(7, 64);
  for (const QPoly* f : {&ex.f1, &ex.f2, &ex.F1, &ex.F2}) EXPECT_TRUE(irreducibility_witness(*f).has_value());
  EXPECT_FALSE(irreducibility_witness(qpoly({-1, 0, 1})).has_value());
}

TEST(Exceptional, StructureThirteen) {
  const auto ex = compute_exceptional_polys(13, 128);
  EXPECT_EQ(ex.f1.degree(), 7);
  EXPECT_EQ(ex.f2.degree(), 35);
  EXPECT_EQ(ex.gh_valuation, 14);
  EXPECT_EQ(ex.f1.coeff(0), Rational(13));
  EXPECT_EQ(gcd_degree(ex.f1, ex.f1.derivative()), Rational(0));
  EXPECT_EQ(gcd_degree(ex.f2, ex.f2.derivative()), Rational(0));
  EXPECT_EQ(gcd_degree(ex.f1, ex.f2), Rational(0));
  EXPECT_EQ(ex.F1.degree(), 7);
  EXPECT_EQ(ex.F2.degree(), 35);
}

TEST(Exceptional, PrecisionRobust) {
  for (int n : {5, 7, 13}) {
    const int prec = exceptional_precision(n);
    const auto a = compute_exceptional_polys(n, prec);
    const auto b = compute_exceptional_polys(n, prec + 16);
    EXPECT_EQ(a.f1, b.f1) << n;
    EXPECT_EQ(a.f2, b.f2) << n;
    EXPECT_EQ(a.F1, b.F1) << n;
    EXPECT_EQ(a.F2, b.F2) << n;
  }
  EXPECT_THROW(compute_exceptional_polys(7, 20), PrecisionError);
}

}  // namespace
}  // namespace ecsec
