#pragma once

// 1-stresses of n+2 points, the induced k-stresses on the boundary complex of
// the (n+1)-simplex, and the sign split of the facets.
//
// Indices are 0-based throughout the library; facet i omits vertex i.

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "simplexlift/spaces.hpp"

namespace simplexlift {

/// Singular values below this fraction of the largest count as zero.
inline constexpr double kDefaultRankTol = 1e-10;

/// Dependence coefficients of the vertices. Unit Euclidean norm; the positive
/// class is at least as large as the negative one, ties broken by alpha(0) > 0.
struct OneStress {
  Eigen::VectorXd alpha;

  int size() const noexcept { return static_cast<int>(alpha.size()); }
  double operator[](int i) const { return alpha(i); }

  static constexpr const char* kNormalization = "unit-norm, majority-positive, tie: alpha_1 > 0";
};

/// Brings raw coefficients to the OneStress convention. Throws InputError for
/// a zero or non-finite vector.
OneStress normalize_stress(const Eigen::VectorXd& raw);

/// Null vector of the dependence system: coordinates over a row of ones in
/// flat space, coordinates alone in curved space.
///
/// Throws NotDegenerateError when the points are independent and
/// DegenerateFaceError (carrying the facet index when one coefficient
/// vanishes) when the null space is not one-dimensional.
OneStress solve_one_stress(const PointList& vertices, const SpaceForm& space, double rank_tol = kDefaultRankTol);

/// Norm of the defining system applied to alpha, relative to the largest
/// vertex norm.
double one_stress_residual(const OneStress& alpha, const PointList& vertices, const SpaceForm& space);

/// A function on the faces of one fixed dimension. `order` is k for a
/// k-stress, which lives on (k-1)-faces.
struct KStress {
  int order = 1;
  std::map<Face, double> values;
};

/// The (face_dim+1)-stress induced by alpha on the face_dim-faces:
/// prod(alpha_s) times k!V_k (flat) or ||F|| (curved).
KStress induce_stress(const OneStress& alpha, const PointList& vertices, int face_dim, const SpaceForm& space);

/// Largest norm, over all (order-2)-faces F, of sum_{G > F} omega(G) u_{F,G}
/// with u_{F,G} the inward unit normal of G at F. Requires order >= 2.
double stress_residual(const KStress& omega, const PointList& vertices, const SpaceForm& space);

struct RadonPartition {
  /// Facet indices (0-based) with alpha > 0 and alpha < 0.
  std::vector<int> x1;
  std::vector<int> x2;
  /// 0: x2 empty (sphere only); 1: |x2| = 1; 2: otherwise.
  int case_id = 2;
  /// V_n(S^n) in case 0, 0 otherwise.
  double target = 0.0;
};

/// Throws InternalConsistencyError if all signs agree outside the sphere.
RadonPartition radon_partition(const OneStress& alpha, const SpaceForm& space);

struct PartitionSums {
  double sum1 = 0.0;
  double sum2 = 0.0;
  /// Sum of the per-facet quadrature error estimates (0 for exact volumes).
  double error_estimate = 0.0;
  std::vector<VolumeResult> facets;
};

PartitionSums partition_sums(const PointList& vertices, const RadonPartition& partition, const SpaceForm& space,
                             const QuadratureConfig& quad = {});

}  // namespace simplexlift
