#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "simplexlift/errors.hpp"
#include "simplexlift/invariants.hpp"
#include "simplexlift/sampling.hpp"

using namespace simplexlift;

namespace {

OneStress stress(std::initializer_list<double> v) {
  Eigen::VectorXd a(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) a(i++) = x;
  return OneStress{a};
}

std::vector<double> to_std(const OneStress& a) { return {a.alpha.data(), a.alpha.data() + a.alpha.size()}; }

const SpaceForm kPlane = SpaceForm::euclidean(2);

}  // namespace

TEST(Invariants, SquareFromOracle) {
  // Frozen from the brute-force determinant oracle: c = (1, 0, -1, 0).
  const InvariantSequence inv = invariant_sequence(fixtures::square(), stress({1, -1, 1, -1}), kPlane);
  ASSERT_EQ(inv.c.size(), 4u);
  EXPECT_NEAR(inv.c[1], 0.0, 1e-14);
  EXPECT_NEAR(inv.c[2], -1.0, 1e-14);
  EXPECT_NEAR(inv.c[3], 0.0, 1e-14);
  EXPECT_EQ(inv.route, InvariantRoute::Determinant);
}

TEST(Invariants, TriangleCentroidFromOracle) {
  // c_1 = sum alpha_i |O A_i|^2 with circumcentre O = (1/2, 1/2): 3/2 - 3/18 = 4/3.
  const PointList tc = fixtures::triangle_centroid();
  const OneStress a = stress({1, 1, 1, -3});
  const InvariantSequence inv = invariant_sequence(tc, a, kPlane);
  EXPECT_NEAR(inv.c[1], 4.0 / 3.0, 1e-14);
  EXPECT_NEAR(inv.c[2], 1.0 / 3.0, 1e-14);
  EXPECT_NEAR(inv.c[3], 0.0, 1e-14);
  const Point o = oracle::circumcenter(tc[0], tc[1], tc[2]);
  double c1 = 0.0;
  for (int i = 0; i < 4; ++i) c1 += a[i] * (tc[static_cast<std::size_t>(i)] - o).squaredNorm();
  EXPECT_NEAR(inv.c[1], c1, 1e-14);
}

TEST(Invariants, OrthocenterHasDoubleRoot) {
  // Oracle: f(x) = x^3 - 24 x^2 + 144 x = x (x - 12)^2 for alpha = (3, 1, 2, -6).
  const InvariantSequence inv = invariant_sequence(fixtures::orthocenter(), stress({3, 1, 2, -6}), kPlane);
  EXPECT_NEAR(inv.c[1], 24.0, 1e-12);
  EXPECT_NEAR(inv.c[2], 144.0, 1e-11);
  const CharPoly cp = characteristic_polynomial(inv);
  EXPECT_EQ(cp.zero_roots, 1);
  EXPECT_NEAR(std::abs(cp.roots[1]), 12.0, 1e-6);
  EXPECT_NEAR(std::abs(cp.roots[2]), 12.0, 1e-6);
}

TEST(Invariants, MatchBruteForceOracleOnRandomConfigurations) {
  Rng rng = make_rng(31);
  for (int n = 2; n <= 4; ++n) {
    const SpaceForm space = SpaceForm::euclidean(n);
    for (int rep = 0; rep < 20; ++rep) {
      const DegenerateSample s = random_degenerate(space, n, rng);
      const OneStress a = solve_one_stress(s.vertices, space);
      const Point p = random_gaussian(n, rng), q = random_gaussian(n, rng);
      const InvariantSequence inv = invariant_sequence(s.vertices, a, space, p, q);
      const std::vector<double> ref = oracle::invariants(s.vertices, to_std(a), p, q);
      for (int k = 0; k <= n + 1; ++k) EXPECT_NEAR(inv.c[static_cast<std::size_t>(k)], ref[static_cast<std::size_t>(k)], 1e-10);
    }
  }
}

TEST(Invariants, ProbePointInvariance) {
  Rng rng = make_rng(32);
  for (int n = 2; n <= 4; ++n) {
    const SpaceForm space = SpaceForm::euclidean(n);
    for (int rep = 0; rep < 10; ++rep) {
      const DegenerateSample s = random_degenerate(space, n, rng);
      const OneStress a = solve_one_stress(s.vertices, space);
      const InvariantSequence base = invariant_sequence(s.vertices, a, space);
      for (int k = 0; k < 5; ++k) {
        const InvariantSequence other =
            invariant_sequence(s.vertices, a, space, random_gaussian(n, rng), random_gaussian(n, rng));
        for (std::size_t j = 0; j < base.c.size(); ++j) EXPECT_NEAR(other.c[j], base.c[j], 1e-9);
      }
      EXPECT_NEAR(base.c.back(), 0.0, 1e-10);  // c_{n+1} vanishes in flat space
    }
  }
}

TEST(Invariants, HomogeneousInAlpha) {
  const PointList tc = fixtures::triangle_centroid();
  const InvariantSequence a = invariant_sequence(tc, stress({1, 1, 1, -3}), kPlane);
  const InvariantSequence b = invariant_sequence(tc, stress({2, 2, 2, -6}), kPlane);
  for (std::size_t k = 0; k < a.c.size(); ++k) EXPECT_NEAR(b.c[k], std::pow(2.0, static_cast<double>(k)) * a.c[k], 1e-13);
}

class CurvedInvariants : public ::testing::TestWithParam<int> {};

TEST_P(CurvedInvariants, C1RoutesAgree) {
  const int kappa = GetParam();
  Rng rng = make_rng(33, static_cast<std::uint64_t>(kappa + 1));
  for (int n = 1; n <= 2; ++n) {
    const SpaceForm space(kappa, n + 1);
    for (int rep = 0; rep < 20; ++rep) {
      const DegenerateSample s = random_degenerate(space, n, rng);
      const OneStress a = solve_one_stress(s.vertices, space);
      Point p, q;
      do {
        p = random_space_point(space, rng);
        q = random_space_point(space, rng);
      } while (std::abs(1.0 + kappa * metric_dot(p, q, space)) < 0.1);
      const InvariantSequence inv = invariant_sequence(s.vertices, a, space, p, q);
      EXPECT_EQ(inv.route, InvariantRoute::CurvatureVolume);
      ASSERT_TRUE(inv.c1_g_route.has_value());
      EXPECT_NEAR(inv.c[1], 2.0 * kappa * a.alpha.sum(), 1e-12);
      EXPECT_NEAR(*inv.c1_g_route, inv.c[1], 1e-9);
    }
  }
}

TEST_P(CurvedInvariants, GPointMatchesAreaDerivative) {
  const int kappa = GetParam();
  const SpaceForm space(kappa, 2);
  Rng rng = make_rng(34, static_cast<std::uint64_t>(kappa + 1));
  for (int rep = 0; rep < 20; ++rep) {
    const PointList t = random_simplex(space, 2, rng);
    EXPECT_NEAR(g_point(t[0], t[1], t[2], space), g_point_fd_oracle(t[0], t[1], t[2], space), 1e-6);
  }
}

INSTANTIATE_TEST_SUITE_P(Curvatures, CurvedInvariants, ::testing::Values(1, -1));

TEST(GPoint, FlatIsChordProduct) {
  const Point b{{1.0, 2.0}}, p{{0.0, 0.0}}, q{{3.0, -1.0}};
  EXPECT_DOUBLE_EQ(g_point(b, p, q, kPlane), (b - p).dot(b - q));
  EXPECT_NEAR(g_point_fd_oracle(b, p, q, kPlane), (b - p).dot(b - q), 1e-6);
}

TEST(GPoint, AntipodalProbesAreSingular) {
  const SpaceForm s = SpaceForm::spherical(2);
  EXPECT_THROW(g_point(Point::Unit(3, 2), Point::Unit(3, 0), -Point::Unit(3, 0), s), SingularConfigurationError);
}

TEST(DFace, EmptyFaceIsOne) {
  EXPECT_EQ(d_face({}, Point{{0.0, 0.0}}, Point{{1.0, 1.0}}), 1.0);
}

TEST(CharPoly, SquareRootsMultiplyToC2) {
  const InvariantSequence inv = invariant_sequence(fixtures::square(), stress({1, -1, 1, -1}), kPlane);
  const CharPoly cp = characteristic_polynomial(inv);
  ASSERT_EQ(cp.roots.size(), 3u);
  EXPECT_EQ(cp.zero_roots, 1);
  EXPECT_TRUE(cp.all_real);
  EXPECT_NEAR((cp.roots[1] * cp.roots[2]).real(), inv.c[2], 1e-12);
  EXPECT_EQ(cp.coeffs, (std::vector<double>{1.0, -inv.c[1], inv.c[2], -inv.c[3]}));
}

TEST(CharPoly, RandomEuclideanRootsAreReal) {
  Rng rng = make_rng(35);
  for (int n = 2; n <= 4; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const DegenerateSample s = random_degenerate(SpaceForm::euclidean(n), n, rng);
      const OneStress a = solve_one_stress(s.vertices, SpaceForm::euclidean(n));
      const CharPoly cp = characteristic_polynomial(invariant_sequence(s.vertices, a, SpaceForm::euclidean(n)));
      EXPECT_EQ(cp.zero_roots, 1);
      EXPECT_LT(cp.max_imag_ratio, 1e-7);
    }
  }
}

TEST(CharPoly, MatrixRouteAgrees) {
  EXPECT_LT(charpoly_matrix_check(fixtures::square(), stress({1, -1, 1, -1})), 1e-10);
  EXPECT_LT(charpoly_matrix_check(fixtures::triangle_centroid(), stress({1, 1, 1, -3})), 1e-10);
  Rng rng = make_rng(36);
  for (int n = 2; n <= 4; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const DegenerateSample s = random_degenerate(SpaceForm::euclidean(n), n, rng);
      EXPECT_LT(charpoly_matrix_check(s.vertices, solve_one_stress(s.vertices, SpaceForm::euclidean(n))), 1e-9);
    }
  }
}
