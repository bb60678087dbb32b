#pragma once

// The invariant sequence c_0..c_{n+1} of a degenerate configuration and its
// characteristic polynomial f(x) = sum_i (-1)^i c_i x^{n+1-i}.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "simplexlift/spaces.hpp"
#include "simplexlift/stress.hpp"

namespace simplexlift {

/// g_B(P, Q): (B-P).(B-Q) in flat space, 2/(1 + kappa P.Q) times the ambient
/// chord product otherwise. Throws SingularConfigurationError when
/// 1 + kappa P.Q vanishes.
double g_point(const Point& b, const Point& p, const Point& q, const SpaceForm& space);

/// Independent evaluation of g_B(P, Q): twice the derivative of the area of
/// the triangle PBQ with |BP|, |BQ| fixed, taken in the angle at B by central
/// differences. Throws DegenerateFaceError for a degenerate triangle.
double g_point_fd_oracle(const Point& b, const Point& p, const Point& q, const SpaceForm& space);

/// det((P_i - P).(P_j - Q)) over the vertices of a flat face; 1 for the empty face.
double d_face(const PointList& face, const Point& p, const Point& q);

enum class InvariantRoute { Determinant, CurvatureVolume };

const char* to_string(InvariantRoute route);

struct InvariantSequence {
  /// c[0] = 1, c[k] for k = 1..n+1.
  std::vector<double> c;
  /// Propagated quadrature error per entry (zero for exact routes).
  std::vector<double> error;
  InvariantRoute route = InvariantRoute::Determinant;
  /// Curved spaces only: c_1 as sum_i alpha_i g_{A_i}(P, Q).
  std::optional<double> c1_g_route;

  int n() const noexcept { return static_cast<int>(c.size()) - 2; }
};

/// Flat space: determinant route with probe points P, Q (default A_{n+1},
/// A_{n+2}). Curved space: curvature-volume route, plus c_1 from the g route
/// at the same probe points.
InvariantSequence invariant_sequence(const PointList& vertices, const OneStress& alpha, const SpaceForm& space,
                                     const std::optional<Point>& p = std::nullopt,
                                     const std::optional<Point>& q = std::nullopt, const QuadratureConfig& quad = {});

struct CharPoly {
  /// Highest degree first; coeffs[0] = 1.
  std::vector<double> coeffs;
  /// Sorted by modulus, then argument.
  std::vector<std::complex<double>> roots;
  /// Roots with modulus below zero_tol.
  int zero_roots = 0;
  /// Largest |Im r| / |r| over the non-zero roots.
  double max_imag_ratio = 0.0;
  bool all_real = true;
  std::string diagnostic;
};

struct RootTolerances {
  double zero_tol = 1e-7;
  double imag_rel_tol = 1e-7;
};

CharPoly characteristic_polynomial(const InvariantSequence& inv, const RootTolerances& tol = {});

/// Flat, n >= 2. Largest coefficient deviation between the characteristic
/// polynomial of C1 C2^T D1 and f(x)/x, where C1, C2 hold the edges from
/// A_{n+1}, A_{n+2} to A_1..A_n and D1 = diag(alpha_1..alpha_n).
double charpoly_matrix_check(const PointList& vertices, const OneStress& alpha);

}  // namespace simplexlift
