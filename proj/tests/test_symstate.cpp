#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "majorana/symstate.hpp"
#include "test_support.hpp"

namespace majorana {
namespace {

using testing::dicke;
using testing::random_point;
using testing::random_rotation;
using testing::random_state;

SymmetricState ghz(int n) {
  std::vector<cplx> a(static_cast<std::size_t>(n) + 1, 0.0);
  a.front() = a.back() = 1.0;
  return SymmetricState(n, a);
}

SymmetricState tetrahedral() { return make_state(4, {1.0, 0.0, 0.0, std::sqrt(2.0), 0.0}); }

TEST(MakeState, BasisStateIsAlreadyNormalized) {
  auto s = make_state(2, {1.0, 0.0, 0.0});
  EXPECT_EQ(s[0], cplx(1.0));
  EXPECT_EQ(s[1], cplx(0.0));
}

TEST(MakeState, NormalizesTetrahedralAmplitudes) {
  auto s = tetrahedral();
  EXPECT_NEAR(s[0].real(), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(s[3].real(), std::sqrt(2.0 / 3.0), 1e-15);
  EXPECT_EQ(s[1], cplx(0.0));
  EXPECT_EQ(s[4], cplx(0.0));
}

TEST(MakeState, PreservesRelativePhase) {
  auto s = make_state(1, {cplx(2.0, 0.0), cplx(0.0, 2.0)});
  EXPECT_NEAR(std::arg(s[1]) - std::arg(s[0]), pi / 2, 1e-15);
}

TEST(MakeState, RejectsZeroVectorAndLengthMismatch) {
  EXPECT_THROW(make_state(1, {0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(make_state(3, {1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(make_state(0, {1.0}), std::invalid_argument);
}

TEST(MajoranaConfig, CanonicalizesPolesAndSorts) {
  MajoranaConfig c({{pi / 2, -pi / 2}, {0.0, 1.3}, {pi, 7.0}, {pi / 2, 5 * pi}});
  ASSERT_EQ(c.n(), 4);
  EXPECT_EQ(c.points()[0], (SpherePoint{0.0, 0.0}));
  EXPECT_NEAR(c.points()[1].phi, pi, 1e-12);
  EXPECT_NEAR(c.points()[2].phi, 3 * pi / 2, 1e-12);
  EXPECT_EQ(c.points()[3], (SpherePoint{pi, 0.0}));
}

TEST(ToMajorana, ProductStateHasAllPointsAtNorthPole) {
  for (int n : {1, 3, 7}) {
    std::vector<cplx> a(static_cast<std::size_t>(n) + 1, 0.0);
    a[0] = 1.0;
    auto c = to_majorana(make_state(n, a));
    ASSERT_EQ(c.n(), n);
    for (const auto& p : c.points()) EXPECT_EQ(p.theta, 0.0);
  }
}

TEST(ToMajorana, GhzSixIsEquatorialHexagon) {
  auto c = to_majorana(ghz(6));
  ASSERT_EQ(c.n(), 6);
  for (int i = 0; i < 6; ++i) {
    EXPECT_NEAR(c.points()[static_cast<std::size_t>(i)].theta, pi / 2, 1e-12);
    if (i > 0)
      EXPECT_NEAR(c.points()[static_cast<std::size_t>(i)].phi - c.points()[static_cast<std::size_t>(i) - 1].phi,
                  pi / 3, 1e-12);
  }
}

TEST(ToMajorana, TetrahedralStateIsRegularTetrahedron) {
  auto v = to_majorana(tetrahedral()).vectors();
  ASSERT_EQ(v.size(), 4U);
  const double expected = std::acos(-1.0 / 3.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_NEAR(angular_distance(v[i], v[j]), expected, 1e-8);
}

TEST(ToMajorana, DickePointsSitAtPoles) {
  auto c = to_majorana(dicke(5, 2));
  int north = 0, south = 0;
  for (const auto& p : c.points()) {
    if (p.theta == 0.0) ++north;
    if (p.theta == pi) ++south;
  }
  EXPECT_EQ(north, 3);
  EXPECT_EQ(south, 2);
}

TEST(ToDicke, TwoNorthPolePointsGiveAllZeros) {
  auto s = to_dicke(MajoranaConfig({{0, 0}, {0, 0}}));
  EXPECT_NEAR(std::abs(s[0]), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[2]), 0.0, 1e-15);
}

TEST(ToDicke, OppositePolesGiveSingleExcitation) {
  auto s = to_dicke(MajoranaConfig({{0, 0}, {pi, 0}}));
  EXPECT_NEAR(std::abs(s[1]), 1.0, 1e-15);
}

TEST(ToDicke, DihedralPatternGivesTwoTermSuperposition) {
  // p points per pole and m equatorial points at phi = pi - pi (2j+1)/m
  for (int m = 2; m <= 6; ++m) {
    for (int p = 0; p <= 2; ++p) {
      const int n = m + 2 * p;
      std::vector<SpherePoint> pts;
      for (int i = 0; i < p; ++i) {
        pts.push_back({0, 0});
        pts.push_back({pi, 0});
      }
      for (int j = 0; j < m; ++j) pts.push_back({pi / 2, pi - pi * (2 * j + 1) / m});
      auto s = to_dicke(MajoranaConfig(pts));
      std::vector<cplx> expected(static_cast<std::size_t>(n) + 1, 0.0);
      expected[static_cast<std::size_t>(p)] = expected[static_cast<std::size_t>(n - p)] = 1.0;
      EXPECT_NEAR(fidelity(s, SymmetricState(n, expected)), 1.0, 1e-12) << "m=" << m << " p=" << p;
    }
  }
}

TEST(ToDicke, MatchesLiteralPermutationSum) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<SpherePoint> pts;
      for (int i = 0; i < n; ++i) pts.push_back(random_point(rng));
      auto oracle = testing::symmetrized_product_oracle(pts);
      auto s = to_dicke(MajoranaConfig(pts));
      EXPECT_NEAR(fidelity(s, SymmetricState(n, oracle)), 1.0, 1e-12);
    }
  }
}

TEST(ToDicke, RejectsMoreThanSixtyFourPoints) {
  std::vector<SpherePoint> pts(65, SpherePoint{0.3, 0.1});
  EXPECT_THROW(to_dicke(MajoranaConfig(pts)), std::invalid_argument);
}

TEST(RoundTrip, RandomStatesReproduceExactly) {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 20; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      auto s = random_state(n, rng);
      auto back = to_dicke(to_majorana(s));
      EXPECT_NEAR(fidelity(s, back), 1.0, 1e-9) << "n=" << n;
      // the stored global phase makes the reconstruction exact, not only a ray
      EXPECT_NEAR(std::abs(s.inner(back) - 1.0), 0.0, 1e-9);
    }
  }
}

TEST(RoundTrip, LargeDickeAndGhz) {
  for (int n : {30, 48, 64}) {
    EXPECT_NEAR(fidelity(ghz(n), to_dicke(to_majorana(ghz(n)))), 1.0, 1e-9);
    EXPECT_NEAR(fidelity(dicke(n, n / 3), to_dicke(to_majorana(dicke(n, n / 3)))), 1.0, 1e-12);
  }
}

TEST(MajoranaPolynomial, RootResidualsWithinTolerance) {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 20; ++n) {
    auto poly = MajoranaPolynomial::from_state(random_state(n, rng));
    double cmax = 0;
    for (auto c : poly.coeffs) cmax = std::max(cmax, std::abs(c));
    for (auto r : poly.roots())
      EXPECT_LE(std::abs(poly(r)), 1e-10 * cmax * std::pow(std::max(1.0, std::abs(r)), poly.degree));
  }
}

TEST(MajoranaPolynomial, DegreeAndZeroDeflation) {
  auto poly = MajoranaPolynomial::from_state(make_state(5, {0.0, 1.0, 0.0, 1.0, 0.0, 0.0}));
  EXPECT_EQ(poly.degree, 3);
  EXPECT_EQ(poly.zero_multiplicity, 1);
  EXPECT_NEAR(std::abs(poly.coeffs[1]), std::sqrt(5.0) / std::sqrt(2.0), 1e-14);
}

TEST(Roots, MultipleRootsAreMerged) {
  // (x - 0.3 - 0.2i)^3 (x + 1.1)
  const cplx a(0.3, 0.2);
  std::vector<cplx> roots{a, a, a, -1.1};
  auto coeffs = detail::expand_roots(roots, 2.0);
  auto found = polynomial_roots(coeffs);
  int near_a = 0;
  for (auto r : found)
    if (std::abs(r - a) < 1e-10) ++near_a;
  EXPECT_EQ(near_a, 3);
}

TEST(Rotate, IdentityIsNoOp) {
  std::mt19937_64 rng(3);
  auto c = to_majorana(random_state(5, rng));
  EXPECT_TRUE(approx_equal(rotate(c, Rotation::identity()), c, 1e-14));
}

TEST(Rotate, HalfTurnAboutXSendsNorthToSouth) {
  auto c = rotate(MajoranaConfig({{0, 0}}), Rotation::from_axis_angle(Vec3::UnitX(), pi));
  EXPECT_EQ(c.points()[0], (SpherePoint{pi, 0.0}));
}

TEST(Rotate, GhzFourIsInvariantUnderQuarterTurn) {
  auto c = to_majorana(ghz(4));
  auto r = rotate(c, Rotation::from_axis_angle(Vec3::UnitZ(), pi / 2));
  EXPECT_TRUE(approx_equal(c, r, 1e-12));
}

TEST(Rotate, CovariantWithRoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 9;
    auto c = to_majorana(random_state(n, rng));
    auto r = random_rotation(rng);
    auto rotated = rotate(c, r);
    EXPECT_TRUE(approx_equal(to_majorana(to_dicke(rotated)), rotated, 1e-8));
  }
}

TEST(OverlapProduct, Examples) {
  EXPECT_NEAR(std::abs(overlap_product(make_state(3, {1.0, 0, 0, 0}), {0, 0})), 1.0, 1e-15);
  for (int n = 2; n <= 10; ++n) EXPECT_NEAR(std::abs(overlap_product(ghz(n), {0, 0})), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(overlap_product(dicke(4, 2), {pi / 2, 0})), std::sqrt(6.0) / 4.0, 1e-15);
}

TEST(OverlapProduct, MatchesQubitSpaceOracle) {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 8; ++n) {
    auto s = random_state(n, rng);
    for (int t = 0; t < 10; ++t) {
      auto p = random_point(rng);
      EXPECT_NEAR(std::abs(overlap_product(s, p) - testing::product_overlap_oracle(s, p)), 0.0, 1e-13);
    }
  }
}

TEST(OverlapProduct, BoundedByOneWithEqualityOnlyForMatchingProductState) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    auto s = random_state(1 + t % 12, rng);
    EXPECT_LE(std::norm(overlap_product(s, random_point(rng))), 1.0 + 1e-14);
  }
  auto p = SpherePoint{1.1, 2.3};
  auto product = to_dicke(MajoranaConfig(std::vector<SpherePoint>(6, p)));
  EXPECT_NEAR(std::norm(overlap_product(product, p)), 1.0, 1e-14);
  EXPECT_LT(std::norm(overlap_product(product, SpherePoint{1.1, 2.4})), 1.0 - 1e-4);
}

TEST(Clusters, GroupsCoincidentPoints) {
  auto cl = cluster_points(to_majorana(dicke(4, 1)));
  ASSERT_EQ(cl.size(), 2U);
  EXPECT_EQ(cl[0].multiplicity + cl[1].multiplicity, 4);
  EXPECT_EQ(std::max(cl[0].multiplicity, cl[1].multiplicity), 3);
}

}  // namespace
}  // namespace majorana
