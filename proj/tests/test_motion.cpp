#include <gtest/gtest.h>

#include <numbers>

#include "fixtures.hpp"
#include "simplexlift/errors.hpp"
#include "simplexlift/motion.hpp"
#include "simplexlift/sampling.hpp"

using namespace simplexlift;

namespace {

std::vector<double> grid(double step, int count) {
  std::vector<double> ts;
  for (int i = 0; i <= count; ++i) ts.push_back(step * i);
  return ts;
}

MotionPath centroid_rise() {
  MotionPath p;
  p.space = SpaceForm::euclidean(3);
  p.evaluate = [](double t) {
    return PointList{Point{{0.0, 0.0, 0.0}}, Point{{1.0, 0.0, 0.0}}, Point{{0.0, 1.0, 0.0}}, Point{{1.0 / 3, 1.0 / 3, t}}};
  };
  return p;
}

}  // namespace

class LiftGeometryTest : public ::testing::TestWithParam<int> {};

TEST_P(LiftGeometryTest, NormalsAreOrthonormalAndNormal) {
  const int kappa = GetParam();
  Rng rng = make_rng(51, static_cast<std::uint64_t>(kappa + 1));
  for (int d : {2, 4}) {
    const SpaceForm space(kappa, d);
    const DegenerateSample s = random_degenerate(space, 2, rng);
    const LiftGeometry g(s.vertices, space);
    EXPECT_EQ(g.space().dim(), std::max(d, 3));
    EXPECT_EQ(g.normal_count(), std::max(d, 3) - 2);
    for (int i = 0; i < g.normal_count(); ++i) {
      for (int j = 0; j < g.normal_count(); ++j) {
        EXPECT_NEAR(metric_dot(g.normals()[i], g.normals()[j], g.space()), i == j ? 1.0 : 0.0, 1e-10);
      }
      for (const auto& b : g.base()) {
        if (kappa == 0) {
          EXPECT_NEAR(g.normals()[i].dot(b - g.base()[0]), 0.0, 1e-10);
        } else {
          EXPECT_NEAR(metric_dot(g.normals()[i], b, g.space()), 0.0, 1e-10);
        }
      }
    }
    const std::vector<Eigen::VectorXd> zero(4, Eigen::VectorXd::Zero(g.normal_count()));
    const PointList same = g.lift(zero, 0.3);
    for (std::size_t i = 0; i < same.size(); ++i) EXPECT_LT((same[i] - g.base()[i]).norm(), 1e-14);
  }
}

INSTANTIATE_TEST_SUITE_P(Curvatures, LiftGeometryTest, ::testing::Values(0, 1, -1));

TEST(ReflectionGap, VanishesOnDegenerateAndGrowsQuadratically) {
  const MotionPath p = centroid_rise();
  EXPECT_LT(reflection_gap_squared(p.evaluate(0.0), p.space), 1e-28);
  const double g1 = reflection_gap_squared(p.evaluate(1e-3), p.space);
  const double g2 = reflection_gap_squared(p.evaluate(2e-3), p.space);
  EXPECT_NEAR(g2 / g1, 4.0, 1e-3);
}

TEST(ReflectionGap, ExplicitTetrahedron) {
  // A_1 = origin mirrored through the plane x + y + z = 1: A_0 = (2/3, 2/3, 2/3).
  const PointList t{Point{{0.0, 0.0, 0.0}}, Point{{1.0, 0.0, 0.0}}, Point{{0.0, 1.0, 0.0}}, Point{{0.0, 0.0, 1.0}}};
  EXPECT_NEAR(reflection_gap_squared(t, SpaceForm::euclidean(3)), 4.0 / 3.0, 1e-14);
}

TEST(Presets, RectangleKeepsConstraint) {
  const MotionTrace tr = trace_path(rectangle_path(2.0, 1.0), grid(0.01, 50));
  EXPECT_EQ(tr.partition.x1, (std::vector<int>{0, 2}));
  for (const auto& s : tr.samples) {
    EXPECT_LT(std::abs(s.s), 1e-10) << "t=" << s.t;
    ASSERT_EQ(s.volumes.size(), 4u);
    EXPECT_NEAR(s.volumes[0], s.volumes[2], 1e-12);  // four congruent facets
    EXPECT_NEAR(s.volumes[0], s.volumes[1], 1e-12);
  }
  EXPECT_GT(tr.samples.back().gap_squared, 0.1);
}

TEST(Presets, TrapezoidKeepsConstraintAndPairsFacets) {
  const MotionTrace tr = trace_path(trapezoid_path(2.0, 3.0, 1.5), grid(0.01, 50));
  for (const auto& s : tr.samples) {
    EXPECT_LT(std::abs(s.s), 1e-10) << "t=" << s.t;
    EXPECT_NEAR(s.volumes[0], s.volumes[1], 1e-12);
    EXPECT_NEAR(s.volumes[2], s.volumes[3], 1e-12);
  }
}

TEST(Presets, TrapezoidKeepsLegsAndDiagonals) {
  for (double t : {0.0, 0.2, 0.5}) {
    const PointList a = trapezoid_family(2.0, 3.0, 1.5, t);
    // Legs stay equal to each other; each gains the vertical offset t.
    EXPECT_NEAR((a[0] - a[3]).norm(), std::hypot(2.0, t), 1e-14);
    EXPECT_NEAR((a[1] - a[2]).norm(), std::hypot(2.0, t), 1e-14);
    EXPECT_NEAR((a[0] - a[2]).norm(), 3.0, 1e-14);
    EXPECT_NEAR((a[1] - a[3]).norm(), 3.0, 1e-14);
  }
}

TEST(Presets, TrapezoidDegeneratesToRectangle) {
  // p = q when d^2 = l^2 + 4 p^2.
  const double l = 1.0, p = 2.0, d = std::sqrt(l * l + 4 * p * p);
  const TrapezoidShape s = trapezoid_shape(l, d, p);
  EXPECT_NEAR(s.q, p, 1e-14);
  EXPECT_NEAR(s.height, l, 1e-14);
  const PointList a = trapezoid_family(l, d, p, 0.3);
  const PointList r = rectangle_path(p, l / 2).evaluate(0.3);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_LT((a[i] - r[i]).norm(), 1e-14);
}

TEST(Presets, InfeasibleTrapezoid) {
  EXPECT_THROW(trapezoid_shape(3.0, 2.0, 1.0), InputError);
  EXPECT_THROW(trapezoid_shape(1.0, 5.0, 1.0), InputError);
  EXPECT_THROW(rectangle_path(-1.0, 1.0), InputError);
}

TEST(Trace, FlagsDegenerateSamples) {
  const PointList a = fixtures::square();
  PointList b = a;
  b[3] = Point{{0.5, 0.0}};  // A_4 on the edge A_1 A_2
  const MotionPath p = waypoint_path({a, b}, SpaceForm::euclidean(2));
  const MotionTrace tr = trace_path(p, {0.0, 0.5, 1.0});
  EXPECT_TRUE(tr.samples[0].diagnostic.empty());
  EXPECT_FALSE(tr.samples[2].diagnostic.empty());
  EXPECT_TRUE(std::isnan(tr.samples[2].s));
}

TEST(Waypoints, PiecewiseLinearAndOnTheSphere) {
  const SpaceForm s = SpaceForm::spherical(2);
  const PointList a{Point::Unit(3, 0), Point::Unit(3, 1), Point::Unit(3, 2)};
  const PointList b{Point::Unit(3, 1), Point::Unit(3, 2), Point::Unit(3, 0)};
  const MotionPath p = waypoint_path({a, b}, s);
  EXPECT_EQ(p.smoothness, Smoothness::Continuous);
  EXPECT_DOUBLE_EQ(p.t_max, 1.0);
  for (const auto& x : p.evaluate(0.4)) EXPECT_NEAR(x.norm(), 1.0, 1e-15);
  EXPECT_LT((p.evaluate(1.0)[0] - b[0]).norm(), 1e-15);
}

class StressFrame : public ::testing::TestWithParam<int> {};

TEST_P(StressFrame, ReproducesTheStressOfADegenerateConfiguration) {
  const int kappa = GetParam();
  Rng rng = make_rng(52, static_cast<std::uint64_t>(kappa + 1));
  for (int n = 1; n <= 3; ++n) {
    const SpaceForm space(kappa, n);
    for (int rep = 0; rep < 10; ++rep) {
      const DegenerateSample s = random_degenerate(space, n, rng);
      const Eigen::VectorXd frame = motion_stress_frame(s.vertices, space).alpha;
      const Eigen::VectorXd a = frame / frame.norm();
      const Eigen::VectorXd ref = s.alpha.alpha / s.alpha.alpha.norm();
      EXPECT_LT(std::min((a - ref).norm(), (a + ref).norm()), 1e-8) << "n=" << n;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Curvatures, StressFrame, ::testing::Values(0, 1, -1));

TEST(StressFrame, AnglesNearZeroOrPi) {
  const MotionStressFrame f = motion_stress_frame(centroid_rise().evaluate(1e-6), SpaceForm::euclidean(3));
  for (int i = 1; i < 4; ++i) {
    const double th = f.theta(i);
    EXPECT_LT(std::min(th, std::numbers::pi - th), 1e-5);
  }
}

TEST(Lift, TriangleCentroidHasConstantSignAndConvergentRatio) {
  const LiftReport rep = lift_experiment(fixtures::triangle_centroid(), SpaceForm::euclidean(2));
  EXPECT_TRUE(rep.sign_constant);
  EXPECT_EQ(rep.sign, 1);
  EXPECT_LT(rep.max_richardson_deviation, 0.05);
  // Frozen: c_1 = 4/3 at alpha = (1,1,1,-3), i.e. 4/(3 sqrt 12) at unit norm.
  EXPECT_NEAR(rep.c_nm1, 4.0 / (3.0 * std::sqrt(12.0)), 1e-12);
  for (const auto& run : rep.runs) {
    EXPECT_FALSE(run.excluded) << run.label;
    EXPECT_NEAR(run.rho_limit, rep.predicted_rho, 1e-3 * std::abs(rep.predicted_rho)) << run.label;
  }
}

TEST(Lift, SquareDiagonalPairKeepsConstraint) {
  LiftConfig cfg;
  cfg.random_lifts = 5;
  const LiftReport rep = lift_experiment(fixtures::square(), SpaceForm::euclidean(2), cfg);
  EXPECT_NEAR(rep.c_nm1, 0.0, 1e-14);
  EXPECT_FALSE(rep.sign_constant);
  EXPECT_EQ(rep.min_abs_delta_s_label, "class X1");
  EXPECT_LT(rep.min_abs_delta_s, 1e-10);
}

TEST(Lift, DeterministicGivenSeed) {
  LiftConfig cfg;
  cfg.random_lifts = 3;
  cfg.seed = 9;
  const LiftReport a = lift_experiment(fixtures::triangle_centroid(), SpaceForm::euclidean(2), cfg);
  const LiftReport b = lift_experiment(fixtures::triangle_centroid(), SpaceForm::euclidean(2), cfg);
  ASSERT_EQ(a.runs.size(), b.runs.size());
  for (std::size_t i = 0; i < a.runs.size(); ++i) {
    for (std::size_t j = 0; j < a.runs[i].samples.size(); ++j) {
      EXPECT_EQ(a.runs[i].samples[j].delta_s, b.runs[i].samples[j].delta_s);
    }
  }
}

TEST(Lift, SphericalConfigurationHasConstantSign) {
  Rng rng = make_rng(53);
  const DegenerateSample s = random_degenerate(SpaceForm::spherical(2), 2, rng, CaseFilter::ExcludeCaseZero);
  LiftConfig cfg;
  cfg.random_lifts = 10;
  const LiftReport rep = lift_experiment(s.vertices, SpaceForm::spherical(2), cfg);
  EXPECT_TRUE(rep.sign_constant);
  EXPECT_LT(rep.max_richardson_deviation, 0.05);
}

TEST(LemmaRatio, FlatPathTendsToOne) {
  const LemmaRatioReport rep = lemma_ratio_check(centroid_rise());
  ASSERT_FALSE(rep.indeterminate);
  double prev = 1.0;
  for (const auto& s : rep.samples) {
    EXPECT_LT(std::abs(s.ratio - 1.0), prev) << "t=" << s.t;
    prev = std::abs(s.ratio - 1.0);
  }
  // Frozen from an independent prototype of both sides.
  EXPECT_NEAR(rep.samples[1].ratio, 1.00045, 2e-5);
  EXPECT_NEAR(rep.samples[2].ratio, 1.00011, 2e-5);
}

TEST(LemmaRatio, SphericalPathTendsToOne) {
  const LemmaRatioReport rep = lemma_ratio_check(spherical_interior_lift_path());
  ASSERT_FALSE(rep.indeterminate);
  EXPECT_NEAR(rep.samples[1].ratio, 1.00022, 2e-5);
  EXPECT_NEAR(rep.samples[2].ratio, 1.00006, 2e-5);
}

TEST(LemmaRatio, FlatMotionIsIndeterminate) {
  MotionPath p;
  p.space = SpaceForm::euclidean(3);
  p.evaluate = [](double t) {
    return PointList{Point{{0.0, 0.0, 0.0}}, Point{{1.0, 0.0, 0.0}}, Point{{0.0, 1.0, 0.0}}, Point{{1.0 / 3 + t, 1.0 / 3, 0.0}}};
  };
  EXPECT_TRUE(lemma_ratio_check(p).indeterminate);
}

TEST(LemmaRatio, NonMonotoneGapIsAnAssumptionViolation) {
  MotionPath p = centroid_rise();
  p.evaluate = [](double t) {
    const double z = t * (0.01 - t);  // the gap shrinks again past t = 5e-3
    return PointList{Point{{0.0, 0.0, 0.0}}, Point{{1.0, 0.0, 0.0}}, Point{{0.0, 1.0, 0.0}}, Point{{1.0 / 3, 1.0 / 3, z}}};
  };
  EXPECT_THROW(lemma_ratio_check(p), AssumptionViolation);
}

TEST(Minkowski, VanishesOnRandomSimplices) {
  Rng rng = make_rng(54);
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 50; ++rep) {
      const PointList s = random_simplex(SpaceForm::euclidean(n + 1), n + 1, rng);
      const MinkowskiResult m = minkowski_residual(s);
      EXPECT_LT(m.plain, 1e-10);
      EXPECT_LT(m.partition_signed, 1e-10);
    }
  }
}

TEST(Minkowski, RejectsWrongShape) {
  EXPECT_THROW(minkowski_residual(fixtures::square()), InputError);
}

TEST(GaussMap, GenericRectangleLiftConverges) {
  Eigen::VectorXd h(4);
  h << 0.3, -0.7, 0.2, 0.9;
  const MotionPath p = generic_lift_path(fixtures::plane({{2, 1}, {-2, 1}, {-2, -1}, {2, -1}}), SpaceForm::euclidean(2), h);
  const GaussMapReport g = gauss_map_limit(p, {0.2, 0.1, 0.05, 0.02, 0.01, 0.005});
  EXPECT_TRUE(g.monotone);
  EXPECT_LT(g.final_residual, 1e-3);
  // Second order in t.
  EXPECT_NEAR(g.residual[3] / g.residual[4], 4.0, 0.1);
}

TEST(GaussMap, RectanglePresetIsExact) {
  const GaussMapReport g = gauss_map_limit(rectangle_path(2.0, 1.0), {0.3, 0.1, 0.01});
  for (double r : g.residual) EXPECT_LT(r, 1e-8);
}

TEST(SphericalSum, BelowSphereVolume) {
  for (int n = 1; n <= 2; ++n) {
    const SphericalSumStats st = spherical_sum_sample(n, n + 1, 200, 5);
    EXPECT_TRUE(st.all_below);
    EXPECT_LT(st.max_gap, 0.0);
    EXPECT_LE(st.min_gap, st.mean_gap);
  }
  EXPECT_THROW(spherical_sum_sample(2, 2, 10, 1), InputError);
}

TEST(SphericalSum, NearCaseZeroApproachesFromBelow) {
  const auto probe = near_case_zero_probe(2, 3, {1e-1, 1e-2, 1e-3});
  double prev = -1e300;
  for (const auto& [h, sum] : probe) {
    const double gap = sum - 4 * std::numbers::pi;
    EXPECT_LT(gap, 0.0) << "h=" << h;
    EXPECT_GT(gap, prev);
    prev = gap;
  }
}
