#pragma once

// Motions of a degenerate configuration out of its M^n, and the quantities
// that control them: the volume constraint S(t), the reflection gap
// |A_0 A_1|^2, the frame stress alpha(t), and the Gauss map of the facets.
//
// A_1 (index 0) is the distinguished vertex; A_0 is its mirror image through
// the span of the facet F_1 that omits it.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplexlift/spaces.hpp"
#include "simplexlift/stress.hpp"

namespace simplexlift {

struct ConstraintValue {
  /// sum_{X1} V - sum_{X2} V - target.
  double s = 0.0;
  std::vector<double> volumes;
  double error_estimate = 0.0;
};

ConstraintValue constraint_value(const PointList& vertices, const RadonPartition& partition, const SpaceForm& space,
                                 const QuadratureConfig& quad = {});

/// |A_0 A_1|^2 under the ambient form, A_0 the reflection of vertex 0 through
/// the span of the remaining vertices.
double reflection_gap_squared(const PointList& vertices, const SpaceForm& space);

/// The degenerate configuration placed in a space with room to leave M^n,
/// together with an orthonormal basis of directions normal to M^n.
class LiftGeometry {
 public:
  /// Appends one ambient coordinate when the space has no room (dim == n).
  LiftGeometry(const PointList& vertices, const SpaceForm& space);

  const SpaceForm& space() const noexcept { return space_; }
  const PointList& base() const noexcept { return base_; }
  int normal_count() const noexcept { return static_cast<int>(normals_.size()); }
  const PointList& normals() const noexcept { return normals_; }

  /// Vertex i moves to base_i + h sum_j offsets[i](j) N_j, pulled back onto the quadric.
  PointList lift(const std::vector<Eigen::VectorXd>& offsets, double h) const;

 private:
  SpaceForm space_;
  PointList base_;
  PointList normals_;
};

enum class PathKind { Rectangle, Trapezoid, GenericLift, Waypoints };
enum class Smoothness { Smooth, Continuous };

const char* to_string(PathKind kind);
const char* to_string(Smoothness s);

struct MotionPath {
  PathKind kind = PathKind::GenericLift;
  std::map<std::string, double> parameters;
  SpaceForm space = SpaceForm::euclidean(3);
  std::function<PointList(double)> evaluate;
  double t_min = 0.0;
  double t_max = 1.0;
  Smoothness smoothness = Smoothness::Smooth;
};

/// A_1 = (a,b,0), A_2 = (-a,b,t), A_3 = (-a,-b,0), A_4 = (a,-b,t).
MotionPath rectangle_path(double a, double b);

struct TrapezoidShape {
  /// Half-widths of the two bases and the height.
  double p = 0.0;
  double q = 0.0;
  double height = 0.0;
};

/// Isosceles trapezoid with legs l, diagonals d and one base of half-width p.
/// Throws InputError when no such trapezoid exists.
TrapezoidShape trapezoid_shape(double l, double d, double p);

/// A_1 = (q,H/2,0), A_2 = (-q,H/2,t), A_3 = (-p,-H/2,0), A_4 = (p,-H/2,t):
/// legs stay equal, diagonals stay fixed and equal. p = q is the rectangle.
PointList trapezoid_family(double l, double d, double p, double t);
MotionPath trapezoid_path(double l, double d, double p);

/// Vertex i rises along the first normal direction of LiftGeometry with speed heights(i).
MotionPath generic_lift_path(const PointList& vertices, const SpaceForm& space, const Eigen::VectorXd& heights);

/// Piecewise linear through the waypoints at t = 0, 1, ..., pulled back onto the quadric.
MotionPath waypoint_path(const std::vector<PointList>& waypoints, const SpaceForm& space);

struct TraceSample {
  double t = 0.0;
  double s = 0.0;
  double gap_squared = 0.0;
  std::vector<double> volumes;
  /// Empty unless the sample was flagged.
  std::string diagnostic;
};

struct MotionTrace {
  RadonPartition partition;
  std::vector<TraceSample> samples;
};

/// Partition from the configuration at t_min.
MotionTrace trace_path(const MotionPath& path, const std::vector<double>& ts, const QuadratureConfig& quad = {});

/// alpha_1(t) = ||F_1||, alpha_i(t) = -||F_i|| cos(theta_i), theta_i the
/// dihedral angle between F_1 and F_i along their common ridge.
struct MotionStressFrame {
  double t = 0.0;
  Eigen::VectorXd alpha;
  /// theta_i in [0, pi]; theta_1 = 0 by convention.
  Eigen::VectorXd theta;
};

MotionStressFrame motion_stress_frame(const PointList& vertices, const SpaceForm& space, double t = 0.0);

/// Heights on the default grid 1e-2 * 2^-j, j = 0..7.
std::vector<double> default_height_grid();

struct LiftConfig {
  int random_lifts = 50;
  bool single_vertex_lifts = true;
  /// Vertex indicator lifts of the positive and negative classes.
  bool class_lifts = true;
  std::vector<double> heights = default_height_grid();
  std::uint64_t seed = 42;
};

struct LiftSample {
  double h = 0.0;
  double delta_s = 0.0;
  double gap_squared = 0.0;
  double rho = 0.0;
};

struct LiftRun {
  std::string label;
  std::vector<LiftSample> samples;
  /// max over consecutive (h, h/2) with h <= 1e-3 of |rho(h) - rho(h/2)| / |rho(h/2)|.
  double richardson_deviation = 0.0;
  /// 2 rho(h/2) - rho(h) on the two smallest heights.
  double rho_limit = 0.0;
  bool excluded = false;
  std::string diagnostic;
};

struct LiftReport {
  RadonPartition partition;
  double c_nm1 = 0.0;
  /// Limit of rho implied by the first-order obstruction (alpha normalised as given).
  double predicted_rho = 0.0;
  std::vector<LiftRun> runs;
  /// Every non-excluded sample has the same non-zero sign of delta S.
  bool sign_constant = false;
  int sign = 0;
  double max_richardson_deviation = 0.0;
  /// min over runs of max_h |delta S|: zero when some lift keeps S fixed.
  double min_abs_delta_s = 0.0;
  std::string min_abs_delta_s_label;
};

LiftReport lift_experiment(const PointList& vertices, const SpaceForm& space, const LiftConfig& cfg = {},
                           const QuadratureConfig& quad = {});

struct LemmaRatioSample {
  double t = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

struct LemmaRatioReport {
  std::vector<LemmaRatioSample> samples;
  /// Both sides vanish: the path never leaves M^n.
  bool indeterminate = false;
  double c_nm1 = 0.0;
  Eigen::VectorXd alpha0;
};

std::vector<double> default_lemma_grid();

/// Central differences with step 1e-3 t. Throws AssumptionViolation when
/// |A_0A_1|^2 or its derivative fails to increase along the grid.
LemmaRatioReport lemma_ratio_check(const MotionPath& path, const std::vector<double>& ts = default_lemma_grid(),
                                   const QuadratureConfig& quad = {});

/// The curved n = 2 path: three points and an interior point on S^2,
/// the interior point rising into S^3 with t.
MotionPath spherical_interior_lift_path();

struct SphericalSumStats {
  int n = 0;
  int d = 0;
  int count = 0;
  int resampled = 0;
  /// sum_i V_n(F_i) - V_n(S^n).
  double max_gap = 0.0;
  double min_gap = 0.0;
  double mean_gap = 0.0;
  bool all_below = false;
};

SphericalSumStats spherical_sum_sample(int n, int d, int count, std::uint64_t seed);

/// Facet-volume sums of a case-0 configuration on S^n lifted into S^{n+1}
/// by each height; they approach V_n(S^n) from below.
std::vector<std::pair<double, double>> near_case_zero_probe(int n, std::uint64_t seed,
                                                            const std::vector<double>& heights);

struct MinkowskiResult {
  /// |sum_i V_n(F_i) u_i| with outward unit normals.
  double plain = 0.0;
  /// |sum_{X1} V B_i - sum_{X2} V B_i| with B_i outward on X1 and inward on X2.
  double partition_signed = 0.0;
};

/// n+2 points in R^{n+1}. Normals come from cofactors of the facet edges.
MinkowskiResult minkowski_residual(const PointList& simplex, const std::optional<RadonPartition>& partition = std::nullopt);

struct GaussMapReport {
  std::vector<double> t;
  std::vector<double> residual;
  bool monotone = false;
  double final_residual = 0.0;
};

/// Facet normals of the flat path in R^{n+1}, signed by the partition at
/// t_min, projected onto the hyperplane of A(t_min) and compared with the dual
/// of A(t_min) up to similarity. `ts` is decreasing.
GaussMapReport gauss_map_limit(const MotionPath& path, const std::vector<double>& ts);

}  // namespace simplexlift
