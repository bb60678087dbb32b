#pragma once

// Space forms of constant curvature and the primitive measurements on them.
//
// Curved spaces are realised inside an ambient vector space of one more
// dimension: the unit sphere in R^{d+1} for curvature +1, and the upper sheet
// x.x = -1, x0 > 0 of the hyperboloid in Lorentzian R^{d,1} for curvature -1.
// Flat space is plain R^d.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace simplexlift {

using Point = Eigen::VectorXd;
using PointList = std::vector<Point>;

class SpaceForm {
 public:
  /// curvature must be -1, 0 or +1 and dim positive; throws InputError otherwise.
  SpaceForm(int curvature, int dim);

  static SpaceForm euclidean(int dim) { return {0, dim}; }
  static SpaceForm spherical(int dim) { return {1, dim}; }
  static SpaceForm hyperbolic(int dim) { return {-1, dim}; }

  int curvature() const noexcept { return curvature_; }
  int dim() const noexcept { return dim_; }
  int ambient_dim() const noexcept { return curvature_ == 0 ? dim_ : dim_ + 1; }
  bool curved() const noexcept { return curvature_ != 0; }

  /// The same kind of space with a different intrinsic dimension.
  SpaceForm with_dim(int dim) const { return {curvature_, dim}; }

  friend bool operator==(const SpaceForm&, const SpaceForm&) = default;

 private:
  int curvature_;
  int dim_;
};

/// An ordered subset of the vertex list. Indices are strictly increasing;
/// the empty face has dimension -1.
struct Face {
  std::vector<int> vertices;

  int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  bool contains(int v) const;

  friend auto operator<=>(const Face&, const Face&) = default;
};

/// All faces of dimension k of the simplex on vertex_count vertices, in
/// lexicographic order.
std::vector<Face> faces_of_dim(int vertex_count, int k);

/// The facet that omits vertex i.
Face facet_omitting(int vertex_count, int i);

PointList face_points(const Face& face, const PointList& vertices);

/// Ambient bilinear form: Euclidean for curvature 0 and +1, Lorentzian
/// (-,+,...,+) for curvature -1.
double metric_dot(const Point& x, const Point& y, const SpaceForm& space);

/// Gram matrix of the given vectors under the ambient form.
Eigen::MatrixXd metric_gram(const PointList& vectors, const SpaceForm& space);

/// Points within `tolerance` of the quadric are projected onto it (normalised
/// on the sphere, rescaled to x.x = -1 with x0 > 0 on the hyperboloid); points
/// farther away are rejected with InputError. Flat points only have their
/// length checked.
Point to_space(const Point& raw, const SpaceForm& space, double tolerance = 1e-8);
PointList to_space(const PointList& raw, const SpaceForm& space, double tolerance = 1e-8);

/// |det(B_i . B_j)|^{1/2} over the ambient form. Curved spaces only.
double gram_norm(const PointList& vertices, const SpaceForm& space);

/// Weight of a face in an induced stress: ||F|| in curved spaces, k! V_k in
/// flat space. Throws DegenerateFaceError when the vertices are dependent.
double face_norm(const PointList& vertices, const SpaceForm& space);

/// Volume of the unit n-sphere S^n, i.e. V_n(S^n).
double unit_sphere_volume(int n);

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  /// Maximum bisection depth of any box in the adaptive cubature.
  int max_depth = 10;
  /// Hard cap on the number of boxes evaluated.
  int max_boxes = 4000;
};

enum class VolumeMethod { Point, GramDeterminant, ArcLength, AngleExcess, Quadrature, MonteCarlo };

const char* to_string(VolumeMethod method);

struct VolumeResult {
  double value = 0.0;
  double error_estimate = 0.0;
  VolumeMethod method = VolumeMethod::Point;
};

/// k-dimensional volume of the simplex spanned by k+1 vertices.
///
/// Flat: sqrt(det G)/k! from the edge vectors (any k). Curved: exact for
/// k <= 2 (arc length, angle excess/defect), adaptive quadrature for k = 3.
/// Throws DegenerateFaceError if the vertices do not span a k-simplex and
/// UnsupportedError for curved k > 3.
VolumeResult simplex_volume(const PointList& vertices, const SpaceForm& space,
                            const QuadratureConfig& quad = {});

/// Curved volume by the quadrature route for any k >= 1 (used directly for
/// k = 3 and as a cross-check for k <= 2).
VolumeResult curved_volume_quadrature(const PointList& vertices, const SpaceForm& space,
                                      const QuadratureConfig& quad = {});

/// Seeded Monte Carlo estimate of the same integral; error_estimate is one
/// standard error.
VolumeResult curved_volume_monte_carlo(const PointList& vertices, const SpaceForm& space,
                                       std::size_t samples, std::uint64_t seed);

/// k! * V_k of a flat simplex, i.e. sqrt(det G) of the edge Gram matrix.
/// No degeneracy check.
double flat_simplex_measure(const PointList& vertices);

/// Shape quality of a flat simplex in [0, 1]: k!V_k divided by the product of
/// the edge lengths from the first vertex (1 for orthogonal edges).
double flat_shape_ratio(const PointList& vertices);

/// Shape quality of the vertex vectors themselves (linear rather than affine
/// independence), for curved simplices: prod R_ii / prod |v_i| of their QR.
double linear_shape_ratio(const PointList& vertices);

/// Mirror image of p through the (affine, flat) or (linear, curved) span of
/// span_points. The span must be a proper subspace; throws InputError when the
/// span points are dependent.
Point reflect_through_span(const Point& p, const PointList& span_points, const SpaceForm& space);

/// Unit normal of the face spanned by `face` + {extra} at its facet `face`,
/// pointing into it: the part of `extra` orthogonal to the affine (flat) or
/// linear (curved, ambient form) span of `face`. Throws DegenerateFaceError
/// when `extra` lies in that span.
Point inward_unit_normal(const PointList& face, const Point& extra, const SpaceForm& space);

/// Geodesic distance between two points of the space.
double geodesic_distance(const Point& x, const Point& y, const SpaceForm& space);

}  // namespace simplexlift
