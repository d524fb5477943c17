#include <gtest/gtest.h>

#include <random>

#include "ecsec/ngon/ngon.hpp"

using namespace ecsec;

namespace {

std::vector<Rational> as_rationals(const std::vector<long>& v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Profile of s_O: a pole of order N - 1 on Z_0 and simple zeros elsewhere.
std::vector<long> s_profile(int n) {
  std::vector<long> r(n, -1);
  r[0] = n - 1;
  return r;
}

}  // namespace

TEST(Ngon, Examples) {
  EXPECT_EQ(solve_valuations(5, {4, -1, -1, -1, -1}).n, as_rationals({2, 0, -1, -1, 0}));
  EXPECT_EQ(solve_valuations(5, {-20, 5, 5, 5, 5}).n, as_rationals({-10, 0, 5, 5, 0}));
  for (int e = 1; e < 8; ++e) {
    auto p = solve_valuations(e, std::vector<long>(e, 0));
    for (const auto& v : p.n) EXPECT_TRUE(v.is_zero());
  }
}

TEST(Ngon, Errors) {
  EXPECT_THROW(solve_valuations(3, {1, 0, 0}), DomainError);
  EXPECT_THROW(solve_valuations(3, {1, -1}), DomainError);
  EXPECT_THROW(solve_valuations(0, {}), DomainError);
}

TEST(Ngon, ClosedFormsForAllOddN) {
  for (int n = 5; n <= 99; n += 2) {
    const auto p = solve_valuations(n, s_profile(n));
    Rational minimum = p.n[0];
    for (int i = 0; i < n; ++i) {
      const Rational expected = Rational(n * n - 1) / Rational(12) - Rational(i * (n - i)) / Rational(2);
      EXPECT_EQ(p.n[i], expected) << "N=" << n << " i=" << i;
      if (p.n[i] < minimum) minimum = p.n[i];
    }
    const Rational bottom = -Rational(n * n - 1) / Rational(24);
    EXPECT_EQ(minimum, bottom);
    for (int i = 0; i < n; ++i) EXPECT_EQ(p.n[i] == bottom, i == (n - 1) / 2 || i == (n + 1) / 2);

    std::vector<long> h(n, n);
    h[0] = -static_cast<long>(n) * (n - 1);
    const auto q = solve_valuations(n, h);
    for (int i = 0; i < n; ++i) {
      const Rational expected = -Rational(n * (n * n - 1)) / Rational(12) + Rational(n * i * (n - i)) / Rational(2);
      EXPECT_EQ(q.n[i], expected) << "N=" << n << " i=" << i;
    }
  }
}

TEST(Ngon, LinearityAndResidual) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int e = 1 + static_cast<int>(rng() % 40);
    std::vector<long> a(e), b(e);
    long sa = 0, sb = 0;
    for (int i = 0; i + 1 < e; ++i) {
      a[i] = d(rng);
      b[i] = d(rng);
      sa += a[i];
      sb += b[i];
    }
    a[e - 1] = -sa;
    b[e - 1] = -sb;
    const long lambda = d(rng);
    std::vector<long> sum(e), scaled(e);
    for (int i = 0; i < e; ++i) {
      sum[i] = a[i] + b[i];
      scaled[i] = lambda * a[i];
    }
    const auto pa = solve_valuations(e, a), pb = solve_valuations(e, b);
    const auto ps = solve_valuations(e, sum), pl = solve_valuations(e, scaled);
    Rational total;
    for (int i = 0; i < e; ++i) {
      EXPECT_EQ(ps.n[i], pa.n[i] + pb.n[i]);
      EXPECT_EQ(pl.n[i], Rational(lambda) * pa.n[i]);
      EXPECT_TRUE(ngon_residual(pa, i).is_zero());
      total += pa.n[i];
    }
    EXPECT_TRUE(total.is_zero());
  }
}
