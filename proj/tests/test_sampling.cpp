#include <gtest/gtest.h>

#include "simplexlift/errors.hpp"
#include "simplexlift/linalg.hpp"
#include "simplexlift/sampling.hpp"

using namespace simplexlift;

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  Rng a = make_rng(42, 1), b = make_rng(42, 1), c = make_rng(42, 2);
  const auto x = a(), y = b(), z = c();
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
}

TEST(RandomOrthonormal, HasOrthonormalColumns) {
  Rng rng = make_rng(61);
  const Eigen::MatrixXd q = random_orthonormal(6, 3, rng);
  EXPECT_LT((q.transpose() * q - Eigen::MatrixXd::Identity(3, 3)).norm(), 1e-13);
}

class DegenerateSampling : public ::testing::TestWithParam<int> {};

TEST_P(DegenerateSampling, PointsLieOnTheSpaceAndSatisfyTheirStress) {
  const int kappa = GetParam();
  Rng rng = make_rng(62, static_cast<std::uint64_t>(kappa + 1));
  for (int n = 1; n <= 3; ++n) {
    const SpaceForm space(kappa, n + 2);
    for (int rep = 0; rep < 10; ++rep) {
      const DegenerateSample s = random_degenerate(space, n, rng);
      ASSERT_EQ(s.vertices.size(), static_cast<std::size_t>(n + 2));
      for (const auto& p : s.vertices) {
        ASSERT_EQ(p.size(), space.ambient_dim());
        if (kappa != 0) EXPECT_NEAR(metric_dot(p, p, space), kappa, 1e-10);
        if (kappa < 0) EXPECT_GT(p(0), 0.0);
      }
      EXPECT_LT(one_stress_residual(s.alpha, s.vertices, space), 1e-10);
      const double ratio = s.alpha.alpha.cwiseAbs().minCoeff() / s.alpha.alpha.cwiseAbs().maxCoeff();
      EXPECT_GE(ratio, 0.05);
      if (kappa == 0) EXPECT_EQ(affine_frame(s.vertices).dim(), n);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Curvatures, DegenerateSampling, ::testing::Values(0, 1, -1));

TEST(DegenerateSampling, CaseFilters) {
  Rng rng = make_rng(63);
  const SpaceForm s2 = SpaceForm::spherical(2);
  for (int rep = 0; rep < 10; ++rep) {
    const DegenerateSample zero = random_degenerate(s2, 2, rng, CaseFilter::CaseZero);
    EXPECT_GT(zero.alpha.alpha.minCoeff(), 0.0);
    const DegenerateSample other = random_degenerate(s2, 2, rng, CaseFilter::ExcludeCaseZero);
    EXPECT_LT(other.alpha.alpha.minCoeff(), 0.0);
  }
}

class Embedding : public ::testing::TestWithParam<int> {};

TEST_P(Embedding, IsAnIsometry) {
  const int kappa = GetParam();
  Rng rng = make_rng(64, static_cast<std::uint64_t>(kappa + 1));
  const SpaceForm from(kappa, 2), to(kappa, 4);
  PointList pts;
  for (int i = 0; i < 4; ++i) pts.push_back(random_space_point(from, rng));
  const PointList img = random_embedding(pts, from, to, rng);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      EXPECT_NEAR(geodesic_distance(img[i], img[j], to), geodesic_distance(pts[i], pts[j], from), 1e-9);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Curvatures, Embedding, ::testing::Values(0, 1, -1));

TEST(RandomSimplex, RespectsShapeBound) {
  Rng rng = make_rng(65);
  for (int k = 1; k <= 4; ++k) {
    const PointList s = random_simplex(SpaceForm::euclidean(4), k, rng, 0.1);
    EXPECT_GE(flat_shape_ratio(s), 0.1);
  }
}
