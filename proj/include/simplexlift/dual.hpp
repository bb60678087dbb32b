#pragma once

// The dual B of a flat degenerate simplex A in R^n: every cross pair of edges
// A_iA_j, B_kB_l with i, j, k, l distinct is orthogonal.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "simplexlift/invariants.hpp"
#include "simplexlift/spaces.hpp"
#include "simplexlift/stress.hpp"

namespace simplexlift {

struct DualConfiguration {
  /// A in canonical position: intrinsic coordinates of R^n with A_{n+2} at the origin.
  PointList a;
  PointList b;
  double c = 1.0;
  /// Original A_{n+2}; canonical A_i = frame^T (A_i - translation).
  Point translation;
  /// ambient x n orthonormal frame of the original affine hull.
  Eigen::MatrixXd frame;
};

/// B_{n+2} = O and <B_i, A_j> = c for j <= n+1, j != i.
/// Throws ConstructionError on a singular system (origin on a facet hyperplane
/// of F_{n+2}) and DegenerateFaceError when F_{n+2} itself is degenerate.
DualConfiguration construct_dual(const PointList& a, double c = 1.0);

/// max |A_iA_j . B_kB_l| over distinct i, j, k, l.
double duality_residual(const PointList& a, const PointList& b);

struct RBetaReport {
  /// r_i = A_iA_j . B_iB_k, averaged over distinct (j, k) avoiding i.
  std::vector<double> r;
  /// max over i of the spread (max - min) of the samples behind r_i.
  double r_spread = 0.0;
  OneStress beta;
  /// Mean of alpha_i r_i and its spread relative to the mean.
  double coupling = 0.0;
  double coupling_spread = 0.0;
  /// max |beta - alpha| after both are normalised.
  double beta_alpha_deviation = 0.0;
};

/// Throws DualityViolation when r_spread exceeds r_tol * max(1, max |r_i|).
RBetaReport compute_r_and_beta(const PointList& a, const PointList& b, const OneStress& alpha, double r_tol = 1e-9);

struct MatrixIdentityReport {
  /// Largest off-diagonal entry of C1 E2^T and E1 C2^T.
  double off_diagonal = 0.0;
  /// Largest deviation of their diagonals from r_1..r_n.
  double diagonal_vs_r = 0.0;
  /// (C2^T D1 C1)(E2^T D2 E1) = c I: the inferred c and max |P - cI| / |c|.
  double identity_constant = 0.0;
  double identity_residual = 0.0;
};

MatrixIdentityReport matrix_identities(const PointList& a, const PointList& b, const OneStress& alpha,
                                       const OneStress& beta, const std::vector<double>& r);

struct ReciprocityReport {
  double c_hat = 0.0;
  double residual = 0.0;
  /// Pairs (lambda_i, mu_sigma(i)) of the chosen matching.
  std::vector<std::pair<std::complex<double>, std::complex<double>>> pairs;
};

/// Matches the non-zero roots of f and g so that the products lambda_i mu_j
/// are as equal as possible. Throws DualityViolation unless both polynomials
/// have exactly one zero root and the same degree.
ReciprocityReport root_reciprocity(const CharPoly& f, const CharPoly& g);

struct SphereFit {
  Point center;
  double radius = 0.0;
  /// max |dist(P_i, center) - radius| over all points.
  double residual = 0.0;
  /// dist - radius of the point that attains the residual (0 if none beyond the first n+1).
  double signed_residual = 0.0;
};

/// Sphere through the first dim+1 points; residual over all. Throws
/// InputError when those points are affinely dependent.
SphereFit cocircularity_test(const PointList& points);

/// sum_i alpha_i, zero exactly when a curved configuration is affinely
/// dependent in the ambient space.
double affine_dependence_test(const OneStress& alpha, const SpaceForm& space);

/// One-parameter family through a configuration whose dual is cospherical.
/// Vertex A_1 moves linearly in s; s_true is the parameter of the cospherical
/// dual, placed off the grid.
struct CrossingScan {
  int n = 0;
  double s_true = 0.0;
  double grid_step = 1e-3;
  std::vector<double> s;
  std::vector<double> c_nm1;
  std::vector<double> sphere_residual;
  std::optional<double> c_crossing;
  std::optional<double> sphere_crossing;
  /// Both crossings found and at most one grid step apart.
  bool coincide = false;
};

CrossingScan cospherical_crossing_scan(int n, std::uint64_t seed, double grid_step = 1e-3, int half_width = 25);

}  // namespace simplexlift
