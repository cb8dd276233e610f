#include "buckle/bounds/sphere.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace {

using namespace buckle;
using namespace buckle::bounds;

Spectrum sphere(int n, int l, std::vector<double> v) { return validate_spectrum(Geometry::sphere, n, l, std::move(v)); }

TEST(FgPolys, FirstOrderSeeds) {
  for (int n = 2; n <= 6; ++n) {
    const auto r = fg_polys(3, n);
    EXPECT_EQ(r.f[1], (IntPolynomial{-(n + 2), 1}));
    EXPECT_EQ(r.g[1], (IntPolynomial{n - 2, 3}));
    EXPECT_EQ(r.f[0], IntPolynomial{1});
    EXPECT_EQ(r.g[0], IntPolynomial{1});
  }
}

TEST(FgPolys, SecondOrderHandExpansion) {
  const auto r = fg_polys(4, 2);
  EXPECT_EQ(r.f[2], (IntPolynomial{8, -12, 1}));
  EXPECT_EQ(r.g[2], (IntPolynomial{0, -8, 5}));
  const auto [f, g] = fg_coupled(2, 2);
  EXPECT_EQ(f[2], (IntPolynomial{8, -12, 1}));
  EXPECT_EQ(g[2], (IntPolynomial{0, -8, 5}));
}

TEST(FgPolys, RecursionsAgreeAndCombinationIsMonic) {
  for (int l = 2; l <= 8; ++l) {
    for (int n = 2; n <= 6; ++n) {
      const auto [f1, g1] = fg_second_order(l - 2, n);
      const auto [f2, g2] = fg_coupled(l - 2, n);
      EXPECT_EQ(f1, f2);
      EXPECT_EQ(g1, g2);
      const auto r = fg_polys(l, n);
      EXPECT_EQ(r.combination.degree(), l - 1);
      EXPECT_EQ(r.combination.leading(), 1);
      EXPECT_EQ(r.a.size(), static_cast<std::size_t>(l - 1));
    }
  }
}

TEST(FgPolys, WideRangeWithoutOverflowAndDetectedBeyond) {
  EXPECT_NO_THROW(fg_polys(12, 10));
  EXPECT_THROW(fg_polys(60, 10), numerics::IntegerOverflow);
  EXPECT_THROW(fg_polys(1, 2), BoundsError);
  EXPECT_THROW(fg_polys(2, 1), BoundsError);
}

TEST(AjCoefficients, HandExamples) {
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(aj_coefficients(2, n), std::vector<Int128>{-1});
  EXPECT_EQ(aj_coefficients(3, 2), (std::vector<Int128>{0, -7}));
  EXPECT_EQ(aj_coefficients(3, 3), (std::vector<Int128>{-1, -8}));
}

TEST(HValue, HandExamplesAndPrecondition) {
  EXPECT_NEAR(h_value(9.0, 2, 4), 61.0 / 7.0, 1e-14);
  EXPECT_NEAR(h_value(2.0, 2, 2), 2.0, 1e-15);
  EXPECT_THROW(h_value(2.0, 2, 4), BoundsError);
  try {
    h_value(2.0, 2, 4);
  } catch (const BoundsError& e) {
    EXPECT_NE(std::string(e.what()).find("spectrum incompatible with sphere bound"), std::string::npos);
  }
}

TEST(HValue, OrderTwoIdentity) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const double lam = (n - 2) + std::uniform_real_distribution<>(0.01, 50.0)(rng);
    EXPECT_NEAR(h_value(lam, 2, n), 1 + lam * (1 - 1 / (lam - (n - 2))), 1e-12 * lam);
  }
}

TEST(Thm12Residual, HandExamples) {
  EXPECT_NEAR(thm12_residual(sphere(2, 2, {2, 3}), 1, 1.0), 2.0, 1e-14);
  EXPECT_NEAR(thm12_residual(sphere(2, 2, {2, 2}), 1, 0.7), 0.0, 1e-15);
  EXPECT_NEAR(thm12_residual(sphere(2, 2, {2, 3}), 1, 2.0), 3.0, 1e-14);
  EXPECT_THROW(thm12_residual(sphere(2, 2, {2, 3}), 1, 0.0), BoundsError);
  EXPECT_THROW(thm12_residual(sphere(4, 2, {1, 3}), 1, 1.0), BoundsError);
  EXPECT_THROW(thm12_residual(validate_spectrum(Geometry::euclidean, 2, 2, {2, 3}), 1, 1.0), BoundsError);
}

TEST(OptimalDelta, HandExampleAndEnvelope) {
  EXPECT_NEAR(optimal_delta(sphere(2, 2, {2, 3}), 1), 1.0, 1e-15);
  EXPECT_THROW(optimal_delta(sphere(2, 2, {2, 2}), 1), BoundsError);

  std::mt19937 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 4, l = 2 + trial % 3;
    std::vector<double> v;
    for (int i = 0; i < 6; ++i) v.push_back(std::pow(n, l - 1) + std::uniform_real_distribution<>(1, 60)(rng));
    for (double t : {1.0, 3.0}) {
      const Spectrum s = sphere(n, l, v).scaled(t);
      const int k = 1 + trial % 5;
      const double ds = optimal_delta(s, k);
      const double at = thm12_residual(s, k, ds);
      for (double d : delta_grid()) EXPECT_LE(at, thm12_residual(s, k, d) + 1e-10 * std::max(1.0, std::abs(at)));
    }
  }
}

TEST(Cor12Bound, HandExample) {
  const auto b = cor12_bound(sphere(2, 2, {2}), 1);
  EXPECT_NEAR(b.s_k, 2.0, 1e-15);
  ASSERT_EQ(b.t.size(), 1u);
  EXPECT_NEAR(b.t[0], 4.0, 1e-14);
  EXPECT_NEAR(b.a, 4.0, 1e-14);
  EXPECT_NEAR(b.b, 12.0, 1e-14);
  ASSERT_TRUE(b.bound);
  EXPECT_NEAR(*b.bound, 6.0, 1e-14);
  EXPECT_GE(*cor12_bound(sphere(2, 2, {2, 3}), 1).bound, 3.0);
  EXPECT_THROW(cor12_bound(sphere(2, 2, {2}), 2), BoundsError);
}

TEST(WxComparator, FactorHandExamples) {
  EXPECT_NEAR(wx_factor_sharp(2.0, 2, 1.0), 2.0, 1e-15);
  EXPECT_NEAR(wx_factor_older(2.0, 2, 1.0), 2.25, 1e-15);
  for (double lam : {0.5, 3.0, 40.0}) {
    EXPECT_NEAR(wx_factor_sharp(lam, 2, 1e-12), 0.0, 1e-9);
    EXPECT_NEAR(wx_factor_older(lam, 2, 1e-12), 0.0, 1e-9);
  }
}

TEST(WxComparator, SharperFactorEverywhere) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<>(3, 10)(rng);
    const double delta = std::exp(std::uniform_real_distribution<>(-5, 5)(rng));
    const double lam = (n - 2) + std::exp(std::uniform_real_distribution<>(-4, 5)(rng));
    EXPECT_GE(wx_factor_older(lam, n, delta) - wx_factor_sharp(lam, n, delta), -1e-12 * std::max(1.0, lam * delta));
  }
}

TEST(WxComparator, Aggregates) {
  const Spectrum s = sphere(3, 2, {4, 5, 7});
  const auto w = wx_comparator(s, 2, 0.8);
  EXPECT_LE(w.rhs_sharp, w.rhs_older);
  EXPECT_NEAR(w.lhs, 2.0 * (9.0 + 4.0), 1e-13);
  EXPECT_THROW(wx_comparator(sphere(3, 3, {4, 5}), 1, 1.0), BoundsError);
  EXPECT_THROW(wx_comparator(s, 1, -1.0), BoundsError);
}

TEST(DeltaGrid, LogarithmicSpacing) {
  const auto g = delta_grid();
  ASSERT_EQ(g.size(), 101u);
  EXPECT_NEAR(g.front(), 1e-2, 1e-16);
  EXPECT_NEAR(g[25], 1e-1, 1e-15);
  EXPECT_NEAR(g.back(), 1e2, 1e-12);
}

}  // namespace
