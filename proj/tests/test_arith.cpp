#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ecsec/arith/cyclotomic.hpp"
#include "ecsec/arith/factor.hpp"
#include "ecsec/arith/ffpoly.hpp"
#include "ecsec/arith/gf.hpp"
#include "ecsec/arith/matrix.hpp"
#include "ecsec/arith/poly.hpp"
#include "ecsec/arith/rational.hpp"
#include "ecsec/arith/series.hpp"

using namespace ecsec;

namespace {

QPoly qpoly(const std::vector<long>& c) { return QPoly::from_ints(Rational(), c); }

// Resultant as the determinant of the Sylvester matrix.
Rational sylvester_resultant(const QPoly& f, const QPoly& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  Matrix<Rational> s(size, std::vector<Rational>(size));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s[n + i][i + k] = g.coeff(n - k);
  return determinant(s, Rational());
}

QPoly random_qpoly(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<long> c(deg + 1);
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return qpoly(c);
}

QSeries random_series(std::mt19937_64& rng, int v, int prec) {
  std::uniform_int_distribution<long> d(-20, 20);
  std::vector<Rational> c;
  for (int i = v; i < prec; ++i) c.emplace_back(d(rng));
  if (c[0].is_zero()) c[0] = Rational(1);
  return QSeries::from_coeffs(Rational(), v, c, prec);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational a(Integer(6), Integer(-4));
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(Rational::parse("-25/2"), Rational(Integer(-25), Integer(2)));
  EXPECT_THROW(Rational(0).inv(), NotInvertible);
}

TEST(Series, GeometricInverse) {
  auto s = QSeries::from_coeffs(Rational(), 0, {Rational(1), Rational(-1)}, 5);
  auto inv = s.inv();
  EXPECT_EQ(inv.valuation(), 0);
  EXPECT_EQ(inv.precision(), 5);
  for (int n = 0; n < 5; ++n) EXPECT_EQ(inv.coeff(n), Rational(1));
  EXPECT_THROW(inv.coeff(5), PrecisionError);
}

TEST(Series, MonomialInverse) {
  auto q = QSeries::monomial(Rational(1), 1);
  auto inv = q.inv();
  EXPECT_TRUE(inv.is_exact());
  EXPECT_EQ(inv.valuation(), -1);
  EXPECT_EQ(inv.coeff(-1), Rational(1));
  auto q5 = QSeries::from_coeffs(Rational(), 1, {Rational(1)}, 5);
  auto i5 = q5.inv();
  EXPECT_EQ(i5.valuation(), -1);
  EXPECT_EQ(i5.precision(), 3);
  EXPECT_EQ(i5.coeff(-1), Rational(1));
  EXPECT_EQ(i5.coeff(0), Rational(0));
}

TEST(Series, ZeroIsNotInvertible) {
  QSeries z(Rational(), 7);
  EXPECT_TRUE(z.is_zero());
  EXPECT_THROW(z.inv(), NotInvertible);
}

TEST(Series, ProductInverseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int vs = static_cast<int>(rng() % 5) - 2, vt = static_cast<int>(rng() % 5) - 2;
    auto s = random_series(rng, vs, vs + 12);
    auto t = random_series(rng, vt, vt + 15);
    auto back = (s * t) * s.inv();
    // Relative precision is the minimum of the inputs'.
    EXPECT_GE(back.precision() - back.valuation(), 12);
    EXPECT_TRUE(back.agrees_with(t));
    EXPECT_EQ(back.valuation(), t.valuation());
  }
}

TEST(Series, PrecisionBookkeeping) {
  std::mt19937_64 rng(5);
  auto s = random_series(rng, 0, 10);
  auto t = random_series(rng, 2, 7);
  EXPECT_EQ((s + t).precision(), 7);
  EXPECT_EQ((s * t).precision(), 2 + 5);
  EXPECT_EQ(s.shifted(3).precision(), 13);
  EXPECT_EQ(s.inflated(2).precision(), 20);
  EXPECT_THROW((s * t).coeff(7), PrecisionError);
  // Cancellation raises the valuation but never the precision.
  auto d = s - s.truncated(4);
  EXPECT_GE(d.valuation(), 4);
  EXPECT_EQ(d.precision(), 4);
  EXPECT_TRUE(d.is_zero());
}

TEST(Series, BinomialFactorMatchesGeneralProduct) {
  std::mt19937_64 rng(3);
  auto s = random_series(rng, -1, 14);
  for (int e = 1; e < 6; ++e) {
    auto b = QSeries::exact(Rational(), 0, {Rational(1), Rational(0), Rational(0)});
    std::vector<Rational> c(e + 1);
    c[0] = 1;
    c[e] = Rational(-3);
    auto fac = QSeries::exact(Rational(), 0, c);
    EXPECT_TRUE(s.mul_binomial(Rational(-3), e).agrees_with(s * fac));
    (void)b;
  }
}

TEST(Poly, DivmodAndGcd) {
  auto f = qpoly({-1, 0, 1});  // x^2 - 1
  auto g = qpoly({1, 1});
  auto [q, r] = QPoly::divmod(f, g);
  EXPECT_EQ(q, qpoly({-1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(QPoly::gcd(f, qpoly({1, 2, 1})), g);
  EXPECT_EQ(qpoly({7, 7, 1}).str("t"), "t^2 + 7*t + 7");
  EXPECT_EQ(qpoly({5, -1}).str("t"), "-t + 5");
}

TEST(Poly, ResultantExamples) {
  EXPECT_EQ(resultant(qpoly({5, 1}), qpoly({10, 1})), Rational(5));
  const auto f1 = qpoly({7, 7, 1});
  const auto f2 = qpoly({735, 588, 168, 21, 1});
  EXPECT_EQ(resultant(f1, f2), Rational(2401));
}

TEST(Poly, ResultantMatchesSylvester) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_qpoly(rng, 1 + static_cast<int>(rng() % 5));
    auto g = random_qpoly(rng, 1 + static_cast<int>(rng() % 5));
    EXPECT_EQ(resultant(f, g), sylvester_resultant(f, g));
  }
}

TEST(Poly, ResultantProperties) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_qpoly(rng, 1 + static_cast<int>(rng() % 4));
    auto g = random_qpoly(rng, 1 + static_cast<int>(rng() % 4));
    auto h = random_qpoly(rng, 1 + static_cast<int>(rng() % 4));
    Rational sign = ((f.degree() * g.degree()) % 2) ? Rational(-1) : Rational(1);
    EXPECT_EQ(resultant(f, g), sign * resultant(g, f));
    EXPECT_EQ(resultant(f, g * h), resultant(f, g) * resultant(f, h));
  }
  EXPECT_THROW(resultant(QPoly(Rational()), QPoly(Rational())), DomainError);
}

TEST(Poly, DiscriminantExamples) {
  EXPECT_EQ(discriminant(qpoly({7, 7, 1})), Rational(21));
  EXPECT_EQ(discriminant(qpoly({5, 1})), Rational(1));
  EXPECT_EQ(discriminant(qpoly({-288000, -1104, 1})), Rational(2370816));
  EXPECT_THROW(discriminant(qpoly({3})), DomainError);
  // b^2 - 4ac and -4p^3 - 27q^2
  EXPECT_EQ(discriminant(qpoly({3, 5, 2})), Rational(25 - 24));
  EXPECT_EQ(discriminant(qpoly({2, -3, 0, 1})), Rational(-4 * -27 - 27 * 4));
}

TEST(Poly, SquareRootAndInterpolation) {
  auto s = qpoly({735, 588, 168, 21, 1});
  EXPECT_EQ(poly_sqrt(s * s, Rational(1)), s);
  EXPECT_THROW(poly_sqrt(s * s + qpoly({1}), Rational(1)), DomainError);
  std::vector<Rational> xs, ys;
  for (int i = 0; i < 5; ++i) {
    xs.emplace_back(i);
    ys.push_back(s.eval(Rational(i)));
  }
  EXPECT_EQ(interpolate(xs, ys), s);
  EXPECT_EQ(primitive_integer_poly(qpoly({25, 2}).scaled(Rational(Integer(-1), Integer(6)))), qpoly({25, 2}));
}

TEST(Matrix, RankExamples) {
  for (int n = 1; n <= 6; ++n) {
    Matrix<Rational> id(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    EXPECT_EQ(matrix_rank(id), static_cast<std::size_t>(n));
    if (n > 1) {
      id[n - 1] = id[0];
      EXPECT_LE(matrix_rank(id), static_cast<std::size_t>(n - 1));
    }
  }
}

TEST(Matrix, RankInvariantUnderScalingAndPermutation) {
  std::mt19937_64 rng(29);
  const GFContext& f31 = prime_field(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 6;
    Matrix<GF> m(n, std::vector<GF>(n, GF(f31)));
    // Low-rank by construction: rows are combinations of r random rows.
    const int r = 1 + static_cast<int>(rng() % n);
    std::vector<std::vector<GF>> base(r, std::vector<GF>(n, GF(f31)));
    for (auto& row : base)
      for (auto& x : row) x = GF::random(f31, rng);
    for (auto& row : m)
      for (int b = 0; b < r; ++b) {
        const GF c = GF::random(f31, rng);
        for (int j = 0; j < n; ++j) row[j] = row[j] + c * base[b][j];
      }
    const auto rank = matrix_rank(m);
    EXPECT_LE(rank, static_cast<std::size_t>(r));
    auto scaled = m;
    for (auto& row : scaled) {
      GF c(f31);
      while (c.is_zero()) c = GF::random(f31, rng);
      for (auto& x : row) x = x * c;
    }
    std::shuffle(scaled.begin(), scaled.end(), rng);
    EXPECT_EQ(matrix_rank(scaled), rank);
  }
}

TEST(Matrix, NullspaceAnnihilates) {
  Matrix<Rational> m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  auto ns = nullspace(m, Rational());
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& row : m) {
    Rational acc;
    for (int j = 0; j < 3; ++j) acc += row[j] * ns[0][j];
    EXPECT_TRUE(acc.is_zero());
  }
}

TEST(Cyclotomic, ReductionExamples) {
  for (int n : {3, 5, 7, 13}) {
    EXPECT_EQ(Cyclotomic::zeta(n, n), Cyclotomic(n, Rational(1)));
    Cyclotomic phi(n);
    for (int i = 0; i < n; ++i) phi += Cyclotomic::zeta(n, i);
    EXPECT_TRUE(phi.is_zero());
    Cyclotomic prod(n, Rational(1));
    for (int j = 1; j < n; ++j) prod *= Cyclotomic::zeta(n, j) - prod.one();
    EXPECT_EQ(prod, Cyclotomic(n, Rational(n)));
    std::vector<Rational> phi_coeffs(n + 1, Rational(1));
    phi_coeffs[n] = 0;
    EXPECT_TRUE(Cyclotomic::from_poly(n, phi_coeffs).is_zero());
  }
}

TEST(Cyclotomic, ReductionIsRingHomomorphism) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int n : {5, 7, 13}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> ca(2 * n), cb(2 * n);
      for (auto& c : ca) c = Rational(d(rng), 1 + rng() % 3);
      for (auto& c : cb) c = Rational(d(rng), 1 + rng() % 3);
      const QPoly a(Rational(), ca), b(Rational(), cb);
      const auto prod = a * b;
      const auto lhs = Cyclotomic::from_poly(n, prod.coeffs());
      const auto rhs = Cyclotomic::from_poly(n, ca) * Cyclotomic::from_poly(n, cb);
      EXPECT_EQ(lhs, rhs);
      const auto sum = Cyclotomic::from_poly(n, (a + b).coeffs());
      EXPECT_EQ(sum, Cyclotomic::from_poly(n, ca) + Cyclotomic::from_poly(n, cb));
    }
  }
}

TEST(Cyclotomic, InverseGaloisAndNorm) {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<long> d(-5, 5);
  for (int n : {5, 7}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Rational> c(n - 1);
      for (auto& x : c) x = Rational(d(rng));
      auto a = Cyclotomic::from_poly(n, c);
      if (a.is_zero()) continue;
      EXPECT_EQ(a * a.inv(), a.one());
      for (int s = 1; s < n; ++s) {
        EXPECT_EQ(a.galois(s).galois(1), a.galois(s));
        EXPECT_EQ((a * a).galois(s), a.galois(s) * a.galois(s));
      }
      EXPECT_TRUE(Cyclotomic(n, a.norm()).is_rational());
    }
    // N(1 - z) = N for prime N.
    EXPECT_EQ((Cyclotomic(n, Rational(1)) - Cyclotomic::zeta(n)).norm(), Rational(n));
  }
}

TEST(Factor, Examples) {
  auto f = factor_integer(Integer(2370816));
  EXPECT_TRUE(f.complete());
  EXPECT_EQ(f.str(), "2^8 * 3^3 * 7^3");
  EXPECT_EQ(factor_integer(Integer(1)).str(), "1");
  EXPECT_TRUE(factor_integer(Integer(1)).primes.empty());
  Integer d = -3 * ipow(7, 18) * ipow(43, 2) * ipow(139, 2) * ipow(421, 2) * ipow(591751, 2);
  auto g = factor_integer(d, {43, 139, 421, 591751});
  EXPECT_TRUE(g.complete());
  EXPECT_EQ(g.str(), "-3 * 7^18 * 43^2 * 139^2 * 421^2 * 591751^2");
  EXPECT_EQ(g.value(), d);
}

TEST(Factor, LargeCofactorIsReportedNotGuessed) {
  // 1000003 * 1000033 exceeds the trial bound squared only with a small bound.
  Integer n = Integer(1000003) * Integer(1000033);
  auto f = factor_integer(n, {}, 1000);
  EXPECT_FALSE(f.complete());
  EXPECT_EQ(f.cofactor, n);
  auto h = factor_integer(n, {Integer(1000003), Integer(1000033)}, 1000);
  EXPECT_TRUE(h.complete());
}

TEST(FiniteField, FieldAxiomsAndFrobenius) {
  std::mt19937_64 rng(41);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 8}, {3, 4}, {5, 6}, {31, 2}, {43, 3}}) {
    const GFContext& f = ext_field(p, k);
    EXPECT_TRUE(detail::mp_is_irreducible(f.modulus, p));
    for (int trial = 0; trial < 20; ++trial) {
      GF a = GF::random(f, rng), b = GF::random(f, rng), c = GF::random(f, rng);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a - b) + b, a);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inv()).is_one());
      }
      EXPECT_EQ(a.pow(f.order), a);
      EXPECT_EQ((a + b).frobenius(), a.frobenius() + b.frobenius());
    }
  }
}

TEST(FiniteField, FirstIrreducibleOrder) {
  // Monic polynomials ordered by sum c_i p^i: x^2 + 1 is first over F_3.
  EXPECT_EQ(ext_field(3, 2).modulus, (detail::ModPoly{1, 0, 1}));
  // Over F_2 degree 2: x^2 + x + 1.
  EXPECT_EQ(ext_field(2, 2).modulus, (detail::ModPoly{1, 1, 1}));
  // Over F_5 degree 2: x^2 + 2 (c0 = 2 is the first non-square... in order).
  EXPECT_EQ(ext_field(5, 2).modulus, (detail::ModPoly{2, 0, 1}));
}

TEST(FiniteField, RootsMatchBruteForce) {
  std::mt19937_64 rng(43);
  for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {5, 2}, {11, 1}, {7, 2}}) {
    const GFContext& f = ext_field(p, k);
    std::vector<GF> all;
    for (std::uint64_t n = 0; n < f.order.get_ui(); ++n) {
      std::vector<std::uint32_t> c;
      std::uint64_t t = n;
      for (int i = 0; i < k; ++i) {
        c.push_back(static_cast<std::uint32_t>(t % p));
        t /= p;
      }
      all.emplace_back(f, c);
    }
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<GF> c(6);
      for (auto& x : c) x = GF::random(f, rng);
      c.back() = GF(f, 1L);
      GFPoly poly(GF(f), c);
      std::vector<GF> expected;
      for (const auto& a : all)
        if (poly.eval(a).is_zero()) expected.push_back(a);
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(roots(poly, rng), expected);
    }
  }
}

TEST(FiniteField, DistinctDegreeFactorization) {
  const GFContext& f = prime_field(5);
  const GF z(f);
  // (x - 1)^2 (x^2 + 2) (x^3 + x + 1): degrees 1, 2, 3.
  auto lin = GFPoly(z, {GF(f, -1L), GF(f, 1L)});
  auto quad = GFPoly(z, {GF(f, 2L), GF(f, 0L), GF(f, 1L)});
  auto cub = GFPoly(z, {GF(f, 1L), GF(f, 1L), GF(f, 0L), GF(f, 1L)});
  ASSERT_TRUE(is_irreducible(quad));
  ASSERT_TRUE(is_irreducible(cub));
  auto ddf = distinct_degree_factorization(lin * lin * quad * cub);
  std::set<int> degs;
  for (auto& [d, g] : ddf) degs.insert(d);
  EXPECT_EQ(degs, (std::set<int>{1, 2, 3}));
  EXPECT_FALSE(is_irreducible(lin * lin));
}

TEST(FiniteField, EmbeddingIsHomomorphismAndDescends) {
  std::mt19937_64 rng(47);
  for (auto [p, k, K] : std::vector<std::tuple<int, int, int>>{{2, 2, 8}, {3, 2, 4}, {5, 3, 6}, {31, 2, 4}}) {
    const GFContext& small = ext_field(p, k);
    const GFContext& big = ext_field(p, K);
    for (int trial = 0; trial < 10; ++trial) {
      GF a = GF::random(small, rng), b = GF::random(small, rng);
      EXPECT_EQ(embed(a * b, big), embed(a, big) * embed(b, big));
      EXPECT_EQ(embed(a + b, big), embed(a, big) + embed(b, big));
      auto back = descend(embed(a, big), small);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, a);
      EXPECT_LE(min_field_degree(embed(a, big)), k);
    }
    GF g = GF::generator(big);
    if (min_field_degree(g) > k) {
      EXPECT_FALSE(descend(g, small).has_value());
    }
  }
}
