#pragma once

// Small dense linear-algebra helpers shared by the geometry modules.

#include <vector>

#include <Eigen/Dense>

#include "simplexlift/spaces.hpp"

namespace simplexlift {

/// Orthonormal frame of the affine hull of a point set.
struct AffineFrame {
  Point origin;
  /// ambient_dim x dim, orthonormal columns.
  Eigen::MatrixXd basis;

  int dim() const noexcept { return static_cast<int>(basis.cols()); }
  Eigen::VectorXd coordinates(const Point& p) const { return basis.transpose() * (p - origin); }
  Point embed(const Eigen::VectorXd& coords) const { return origin + basis * coords; }
};

/// Singular values below rel_tol * (largest) count as zero.
AffineFrame affine_frame(const PointList& points, double rel_tol = 1e-10);

/// Coordinates of the points in their own affine frame (intrinsic R^m).
PointList intrinsic_coordinates(const PointList& points, double rel_tol = 1e-10);

/// Orthonormal basis of the null space of m, with the rank decided by the
/// relative singular-value threshold. Columns are the right singular vectors
/// belonging to the smallest singular values.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel_tol = 1e-10);

/// Generalised cross product of the rows of an n x (n+1) matrix: the vector
/// orthogonal to every row whose length is the n-volume of the parallelotope
/// they span. Computed by cofactor expansion.
Eigen::VectorXd cofactor_normal(const Eigen::MatrixXd& rows);

/// Coefficients of det(xI - m), highest degree first (leading 1), by the
/// Faddeev-LeVerrier recursion.
std::vector<double> characteristic_coefficients(const Eigen::MatrixXd& m);

/// Procrustes distance between two labelled point sets up to similarity
/// (translation, rotation, reflection, uniform scale): the Frobenius residual
/// of the best fit of `moving` onto `target`, divided by the spread of `target`.
double similarity_residual(const PointList& moving, const PointList& target);

}  // namespace simplexlift
