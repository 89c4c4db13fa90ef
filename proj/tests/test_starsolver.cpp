#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "majorana/starsolver.hpp"

using namespace majorana;

namespace {

constexpr double pi = std::numbers::pi;

// Largest chordal distance after greedy nearest matching of expanded star lists.
double set_distance(const StarSet& a, const StarSet& b) {
  auto xs = a.expanded();
  auto ys = b.expanded();
  if (xs.size() != ys.size()) return INFINITY;
  std::vector<bool> used(ys.size(), false);
  double worst = 0.0;
  for (const Star& x : xs) {
    double best = INFINITY;
    std::size_t pick = 0;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (used[j]) continue;
      const double d = chordal_distance(x, ys[j]);
      if (d < best) best = d, pick = j;
    }
    used[pick] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<cplx> random_amplitudes(std::mt19937_64& rng, int size) {
  std::normal_distribution<double> g;
  std::vector<cplx> out(size);
  for (auto& c : out) c = {g(rng), g(rng)};
  return out;
}

}  // namespace

TEST(StarPolynomial, Su2CoherentIsBinomialPower) {
  // eta = 2, j = 10: a_n proportional to C(20, n) (-2)^n, i.e. (1 - 2z)^20
  const auto poly = build_star_polynomial(coherent(Symmetry::su2(10.0), 2.0));
  ASSERT_EQ(poly.effective_degree, 20);
  EXPECT_EQ(poly.infinite_root_count, 0);
  double binom = 1.0;
  const cplx ratio = poly.coeffs[20] / std::pow(2.0, 20);
  for (int n = 0; n <= 20; ++n) {
    const cplx expected = ratio * binom * std::pow(-2.0, n);
    EXPECT_LE(std::abs(poly.coeffs[n] - expected), 1e-13 * std::abs(expected)) << n;
    binom = binom * (20 - n) / (n + 1);
  }
}

TEST(StarPolynomial, VacuumHasOnlyInfiniteRoots) {
  const auto poly = build_star_polynomial(vacuum(Symmetry::heisenberg_weyl(20)));
  EXPECT_EQ(poly.effective_degree, 0);
  EXPECT_EQ(poly.infinite_root_count, 20);
  EXPECT_TRUE(find_roots(poly).roots.empty());
  const StarSet s = stars(vacuum(Symmetry::heisenberg_weyl(20)));
  EXPECT_TRUE(s.stars.empty());
  EXPECT_EQ(s.south_pole_count, 20);
}

TEST(StarPolynomial, EqualSuperpositionTwoLevels) {
  const auto state = from_amplitudes(Symmetry::heisenberg_weyl(2), {1.0, 1.0, 1.0});
  const auto poly = build_star_polynomial(state);
  const cplx k = poly.coeffs[0];
  EXPECT_NEAR(std::abs(poly.coeffs[1] / k - cplx(-2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(poly.coeffs[2] / k - cplx(std::sqrt(2.0))), 0.0, 1e-15);
  double top = 0.0;
  for (const cplx& c : poly.coeffs) top = std::max(top, std::abs(c));
  EXPECT_EQ(top, 1.0);
}

TEST(StarPolynomial, TrailingZerosBecomeInfiniteRoots) {
  const auto state = from_amplitudes(Symmetry::heisenberg_weyl(4), {1.0, 0.5, 0.25, 0.0, 0.0});
  const auto poly = build_star_polynomial(state);
  EXPECT_EQ(poly.effective_degree, 2);
  EXPECT_EQ(poly.infinite_root_count, 2);
  const StarSet s = stars(state);
  EXPECT_EQ(s.finite_count(), 2);
  EXPECT_EQ(s.south_pole_count, 2);
  EXPECT_EQ(s.expanded().size(), 4u);
}

TEST(StarPolynomial, ClassicRejectsOtherSymmetries) {
  EXPECT_THROW(classic_majorana_polynomial(vacuum(Symmetry::heisenberg_weyl(3))), DomainError);
}

TEST(StarSet, SpinHalfBasisStatesArePoles) {
  // amplitude index n labels |j, -j + n>
  const auto sym = Symmetry::su2(0.5);
  const StarSet down = stars(from_amplitudes(sym, {1.0, 0.0}));
  EXPECT_TRUE(down.stars.empty());
  EXPECT_EQ(down.south_pole_count, 1);
  const StarSet up = stars(from_amplitudes(sym, {0.0, 1.0}));
  ASSERT_EQ(up.stars.size(), 1u);
  EXPECT_EQ(up.stars[0].theta, 0.0);
  EXPECT_EQ(up.stars[0].phi, 0.0);
  EXPECT_EQ(up.south_pole_count, 0);
}

TEST(StarSet, RootsToBlochExamples) {
  const std::vector<cplx> roots{{1.0, 0.0}, {0.0, std::tan(pi / 8)}};
  const StarSet s = roots_to_bloch(roots, 3);
  ASSERT_EQ(s.stars.size(), 2u);
  EXPECT_NEAR(s.stars[0].theta, pi / 4, 1e-15);
  EXPECT_NEAR(s.stars[0].phi, pi / 2, 1e-15);
  EXPECT_NEAR(s.stars[1].theta, pi / 2, 1e-15);
  EXPECT_EQ(s.stars[1].phi, 0.0);
  EXPECT_EQ(s.south_pole_count, 3);
  EXPECT_EQ(s.nominal_degree, 5);
  const auto all = s.expanded();
  ASSERT_EQ(all.size(), 5u);
  EXPECT_EQ(all.back().theta, pi);
}

TEST(StarSet, ClustersMergeWithinRadius) {
  const std::vector<cplx> roots{0.5, 0.5 + 1e-9, cplx(0.5, -1e-9), -2.0};
  const StarSet s = roots_to_bloch(roots, 0);
  ASSERT_EQ(s.stars.size(), 2u);
  EXPECT_EQ(s.stars[0].multiplicity, 3);
  EXPECT_EQ(s.stars[1].multiplicity, 1);
  EXPECT_EQ(s.finite_count(), 4);
}

TEST(StarSet, PhiInRangeAndSorted) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const StarSet s = stars(from_amplitudes(Symmetry::heisenberg_weyl(12), random_amplitudes(rng, 13)));
    for (std::size_t i = 0; i < s.stars.size(); ++i) {
      EXPECT_GE(s.stars[i].phi, 0.0);
      EXPECT_LT(s.stars[i].phi, 2 * pi);
      EXPECT_GE(s.stars[i].theta, 0.0);
      EXPECT_LE(s.stars[i].theta, pi);
      if (i > 0) {
        const auto& a = s.stars[i - 1];
        const auto& b = s.stars[i];
        EXPECT_TRUE(a.theta < b.theta || (a.theta == b.theta && a.phi <= b.phi));
      }
    }
  }
}

TEST(StarSet, ChordalDistance) {
  EXPECT_NEAR(chordal_distance(cplx(0.0), cplx(1.0)), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(chordal_distance(cplx(0.0), cplx(1e300)), 2.0, 1e-15);
  EXPECT_NEAR(chordal_distance(cplx(1e300), cplx(-1e300)), 0.0, 1e-15);
  Star north, south;
  south.theta = pi;
  EXPECT_NEAR(chordal_distance(north, south), 2.0, 1e-15);
}

TEST(StarSet, SmsvOddCutoffHasOneSouthPoleStar) {
  const StarSet s = stars(squeezed_vacuum(Symmetry::heisenberg_weyl(5), 0.3));
  EXPECT_EQ(s.finite_count(), 4);
  EXPECT_EQ(s.south_pole_count, 1);
}

TEST(StarSet, Su2CoherentSingleCluster) {
  const StarSet s = stars(coherent(Symmetry::su2(10.0), 2.0));
  ASSERT_EQ(s.stars.size(), 1u);
  EXPECT_EQ(s.stars[0].multiplicity, 20);
  EXPECT_NEAR(std::abs(s.stars[0].z - 0.5), 0.0, 1e-6);
  EXPECT_NEAR(s.stars[0].theta, 2 * std::atan(0.5), 1e-6);
}

TEST(StarSetProperty, GlobalScaleInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto raw = random_amplitudes(rng, 10);
    auto scaled = raw;
    const cplx k = std::polar(3.7, 1.1 * trial);
    for (auto& c : scaled) c *= k;
    const auto sym = Symmetry::heisenberg_weyl(9);
    EXPECT_LE(set_distance(stars(from_amplitudes(sym, raw)), stars(from_amplitudes(sym, scaled))), 1e-9);
  }
}

TEST(StarSetProperty, ConjugationReflectsPhi) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto raw = random_amplitudes(rng, 9);
    auto conj = raw;
    for (auto& c : conj) c = std::conj(c);
    const auto sym = Symmetry::heisenberg_weyl(8);
    StarSet a = stars(from_amplitudes(sym, raw));
    const StarSet b = stars(from_amplitudes(sym, conj));
    for (auto& st : a.stars) st.phi = st.phi == 0.0 ? 0.0 : 2 * pi - st.phi;
    EXPECT_LE(set_distance(a, b), 1e-9);
  }
}

TEST(StarSetProperty, Su2AndHeisenbergWeylAgreeOnReducedAmplitudes) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int degree = 3 + trial % 10;
    const auto x = random_amplitudes(rng, degree + 1);
    const StarSet hw = stars(from_reduced_amplitudes(Symmetry::heisenberg_weyl(degree), x));
    const StarSet su2 = stars(from_reduced_amplitudes(Symmetry::su2_twice(degree), x));
    EXPECT_LE(set_distance(hw, su2), 1e-9) << "degree " << degree;
  }
}

TEST(StarSetProperty, ClassicPolynomialAgrees) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const int two_j = 1 + trial % 16;
    const auto state = from_amplitudes(Symmetry::su2_twice(two_j), random_amplitudes(rng, two_j + 1));
    const auto classic = classic_majorana_polynomial(state);
    const auto r = find_roots(classic);
    const StarSet a = roots_to_bloch(r.roots, classic.infinite_root_count);
    EXPECT_LE(set_distance(a, stars(state)), 1e-9) << "2j " << two_j;
  }
}
