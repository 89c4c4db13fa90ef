#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "majorana/algebra.hpp"
#include "majorana/roots.hpp"

using namespace majorana;

namespace {

std::vector<cplx> binomial_power(cplx root, int degree) {
  // (1 - z/root)^degree scaled by root^degree, i.e. expansion of (root - z)^degree
  std::vector<cplx> c{1.0};
  for (int k = 0; k < degree; ++k) {
    c.push_back(0.0);
    for (int n = static_cast<int>(c.size()) - 1; n >= 0; --n) {
      c[n] = (n > 0 ? -c[n - 1] : cplx(0.0)) + root * c[n];
    }
  }
  return c;
}

std::vector<cplx> multiply(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST(Roots, QuadraticMatchesClosedForm) {
  const std::vector<cplx> p{1.0, -2.0, std::sqrt(2.0)};
  const auto r = solve_polynomial(p, {});
  ASSERT_EQ(r.roots.size(), 2u);
  // (1 +- i sqrt(sqrt 2 - 1)) / sqrt 2
  const double re = 1.0 / std::sqrt(2.0);
  const double im = std::sqrt(std::sqrt(2.0) - 1.0) / std::sqrt(2.0);
  for (const cplx& z : r.roots) {
    EXPECT_NEAR(z.real(), re, 1e-15);
    EXPECT_NEAR(std::abs(z.imag()), im, 1e-15);
  }
  EXPECT_NE(std::signbit(r.roots[0].imag()), std::signbit(r.roots[1].imag()));
}

TEST(Roots, TwentyFoldRootIsCertified) {
  // (1 - 2z)^20 = 2^20 (1/2 - z)^20
  std::vector<cplx> p(21);
  double binom = 1.0;
  for (int n = 0; n <= 20; ++n) {
    p[n] = binom * std::pow(-2.0, n);
    binom = binom * (20 - n) / (n + 1);
  }
  const auto r = solve_polynomial(p, {});
  ASSERT_EQ(r.roots.size(), 20u);
  cplx sum = 0.0;
  for (const cplx& z : r.roots) sum += z;
  EXPECT_LE(std::abs(sum / 20.0 - 0.5), 1e-6);
  EXPECT_LE(std::abs(sum - 10.0), 1e-6 * 20);
  EXPECT_EQ(r.certified_clusters, 1);
  for (const cplx& z : r.roots) EXPECT_NEAR(std::abs(z - 0.5), 0.0, 1e-12);
  EXPECT_LT(r.root_sum_error, 1e-12);
  EXPECT_LT(r.root_product_error, 1e-12);
}

TEST(Roots, TwoMultipleRootsAndSimpleOne) {
  // (z - 1)^3 (z + 2)^2 (z - 0.3i)
  auto p = multiply(binomial_power(1.0, 3), binomial_power(-2.0, 2));
  p = multiply(p, {cplx(0.0, -0.3), 1.0});
  const auto r = solve_polynomial(p, {});
  ASSERT_EQ(r.roots.size(), 6u);
  EXPECT_EQ(r.certified_clusters, 2);
  int near_one = 0, near_minus_two = 0, near_i = 0;
  for (const cplx& z : r.roots) {
    if (std::abs(z - 1.0) < 1e-12) ++near_one;
    if (std::abs(z + 2.0) < 1e-12) ++near_minus_two;
    if (std::abs(z - cplx(0.0, 0.3)) < 1e-14) ++near_i;
  }
  EXPECT_EQ(near_one, 3);
  EXPECT_EQ(near_minus_two, 2);
  EXPECT_EQ(near_i, 1);
}

TEST(Roots, CloseButDistinctRootsStaySeparate) {
  const cplx a{0.5, 0.0}, b{0.5 + 1e-3, 0.0};
  const auto p = multiply({-a, 1.0}, {-b, 1.0});
  const auto r = solve_polynomial(p, {});
  EXPECT_EQ(r.certified_clusters, 0);
  auto roots = r.roots;
  std::sort(roots.begin(), roots.end(), [](cplx x, cplx y) { return x.real() < y.real(); });
  EXPECT_NEAR(std::abs(roots[0] - a), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(roots[1] - b), 0.0, 1e-12);
}

TEST(Roots, ZeroLowCoefficientsGiveExactZeroRoots) {
  const std::vector<cplx> p{0.0, 0.0, -1.0, 1.0};  // z^2 (z - 1)
  const auto r = solve_polynomial(p, {});
  ASSERT_EQ(r.roots.size(), 3u);
  EXPECT_EQ(r.roots[0], cplx(0.0, 0.0));
  EXPECT_EQ(r.roots[1], cplx(0.0, 0.0));
  EXPECT_NEAR(std::abs(r.roots[2] - 1.0), 0.0, 1e-15);
}

TEST(Roots, DegreeZeroAndOne) {
  EXPECT_TRUE(solve_polynomial(std::vector<cplx>{3.0}, {}).roots.empty());
  const auto r = solve_polynomial(std::vector<cplx>{cplx(1.0, 1.0), 2.0}, {});
  ASSERT_EQ(r.roots.size(), 1u);
  EXPECT_NEAR(std::abs(r.roots[0] - cplx(-0.5, -0.5)), 0.0, 1e-16);
}

TEST(Roots, RejectsZeroLeadingCoefficientAndBadConfig) {
  EXPECT_THROW(solve_polynomial(std::vector<cplx>{1.0, 0.0}, {}), DomainError);
  SolverConfig bad;
  bad.residual_tol = 0.0;
  EXPECT_THROW(solve_polynomial(std::vector<cplx>{1.0, 1.0}, bad), DomainError);
}

TEST(Roots, NonConvergenceCarriesBestIterate) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  std::vector<cplx> p(25);
  for (auto& c : p) c = {g(rng), g(rng)};
  SolverConfig cfg;
  cfg.max_iter = 1;
  try {
    solve_polynomial(p, cfg);
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_EQ(e.best().roots.size(), 24u);
    EXPECT_EQ(e.best().residuals.size(), 24u);
    EXPECT_GT(e.best().max_residual(), cfg.residual_tol);
  }
}

TEST(Roots, WideDynamicRangeCoefficients) {
  // Roots spread over many decades: 10^-6, ..., 10^6.
  std::vector<cplx> roots;
  for (int e = -6; e <= 6; ++e) roots.push_back(std::polar(std::pow(10.0, e), 0.37 * e));
  const auto p = monic_from_roots(roots);
  const auto r = solve_polynomial(p, {});
  for (const cplx& expected : roots) {
    double best = 1e300;
    for (const cplx& z : r.roots) best = std::min(best, std::abs(z - expected) / std::abs(expected));
    EXPECT_LT(best, 1e-10) << expected;
  }
}

TEST(Roots, RandomPolynomialsSatisfyResidualAndReconstruction) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> g;
  int well_separated = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = 5 + trial % 26;
    std::vector<cplx> p(degree + 1);
    for (auto& c : p) c = {g(rng), g(rng)};
    const auto r = solve_polynomial(p, {});
    ASSERT_EQ(static_cast<int>(r.roots.size()), degree);
    for (std::size_t i = 0; i < r.roots.size(); ++i) {
      EXPECT_LE(relative_residual(p, r.roots[i]), 1e-8);
      EXPECT_EQ(relative_residual(p, r.roots[i]), r.residuals[i]);
    }
    double min_gap = 1e300;
    for (std::size_t i = 0; i < r.roots.size(); ++i)
      for (std::size_t j = i + 1; j < r.roots.size(); ++j)
        min_gap = std::min(min_gap, std::abs(r.roots[i] - r.roots[j]));
    if (min_gap <= 1e-2) continue;
    ++well_separated;
    const auto rebuilt = monic_from_roots(r.roots);
    for (int n = 0; n <= degree; ++n) {
      const cplx expected = p[n] / p[degree];
      EXPECT_LE(std::abs(rebuilt[n] - expected), 1e-6 * std::abs(expected))
          << "trial " << trial << " n " << n;
    }
  }
  EXPECT_GT(well_separated, 100);
}

TEST(Roots, RelativeResidualHandlesHugeArguments) {
  const std::vector<cplx> p{1.0, 0.0, 1.0};
  EXPECT_LT(relative_residual(p, cplx(0.0, 1.0)), 1e-16);
  EXPECT_NEAR(relative_residual(p, cplx(1e200, 0.0)), 1.0, 1e-15);
  EXPECT_NEAR(relative_residual(p, 0.0), 1.0, 0.0);
}

TEST(Roots, MonicFromRoots) {
  const auto c = monic_from_roots(std::vector<cplx>{1.0, 2.0});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], cplx(2.0));
  EXPECT_EQ(c[1], cplx(-3.0));
  EXPECT_EQ(c[2], cplx(1.0));
}
