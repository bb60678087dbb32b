#include "simplexlift/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <unsupported/Eigen/Polynomials>

#include "simplexlift/errors.hpp"
#include "simplexlift/linalg.hpp"

namespace simplexlift {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Area of a triangle with sides a, b and included angle theta.
double sas_area(double a, double b, double theta, int kappa) {
  if (kappa == 0) {
    const double c = std::sqrt(std::max(0.0, a * a + b * b - 2.0 * a * b * std::cos(theta)));
    const double s = 0.5 * (a + b + c);
    return std::sqrt(std::max(0.0, s * (s - a) * (s - b) * (s - c)));
  }
  double c;
  if (kappa > 0) {
    c = std::acos(std::clamp(std::cos(a) * std::cos(b) + std::sin(a) * std::sin(b) * std::cos(theta), -1.0, 1.0));
  } else {
    c = std::acosh(std::max(1.0, std::cosh(a) * std::cosh(b) - std::sinh(a) * std::sinh(b) * std::cos(theta)));
  }
  const double s = 0.5 * (a + b + c);
  // L'Huilier: tan(E/4)^2 = prod t(s_i / 2), t = tan on the sphere, tanh on the hyperboloid.
  auto t = [kappa](double x) { return kappa > 0 ? std::tan(0.5 * x) : std::tanh(0.5 * x); };
  const double prod = t(s) * t(s - a) * t(s - b) * t(s - c);
  return 4.0 * std::atan(std::sqrt(std::max(0.0, prod)));
}

Point tangent_at(const Point& base, const Point& x, const SpaceForm& space) {
  if (!space.curved()) return x - base;
  return x - space.curvature() * metric_dot(base, x, space) * base;
}

}  // namespace

double g_point(const Point& b, const Point& p, const Point& q, const SpaceForm& space) {
  const double chord = metric_dot(b - p, b - q, space);
  if (!space.curved()) return chord;
  const double denom = 1.0 + space.curvature() * metric_dot(p, q, space);
  if (std::abs(denom) < 1e-12) {
    throw SingularConfigurationError("g_B(P,Q) is singular: P and Q are antipodal");
  }
  return 2.0 / denom * chord;
}

double g_point_fd_oracle(const Point& b, const Point& p, const Point& q, const SpaceForm& space) {
  const double a = geodesic_distance(b, p, space);
  const double c = geodesic_distance(b, q, space);
  const Point u = tangent_at(b, p, space);
  const Point w = tangent_at(b, q, space);
  const double uu = metric_dot(u, u, space);
  const double ww = metric_dot(w, w, space);
  const double uw = metric_dot(u, w, space);
  const double cross = std::sqrt(std::max(0.0, uu * ww - uw * uw));
  if (a < 1e-12 || c < 1e-12 || cross < 1e-12 * std::max(uu * ww, 1e-300)) {
    throw DegenerateFaceError("triangle PBQ is degenerate");
  }
  const double theta = std::atan2(cross, uw);
  const double h = std::min({1e-4, 0.5 * theta, 0.5 * (std::numbers::pi - theta)});
  const int kappa = space.curvature();
  const double deriv = (sas_area(a, c, theta + h, kappa) - sas_area(a, c, theta - h, kappa)) / (2.0 * h);
  return 2.0 * deriv;
}

double d_face(const PointList& face, const Point& p, const Point& q) {
  const Eigen::Index m = static_cast<Eigen::Index>(face.size());
  if (m == 0) return 1.0;
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Point& pi = face[static_cast<std::size_t>(i)];
    if (pi.size() != p.size() || pi.size() != q.size()) throw InputError("d_face: dimension mismatch");
    for (Eigen::Index j = 0; j < m; ++j) g(i, j) = (pi - p).dot(face[static_cast<std::size_t>(j)] - q);
  }
  return g.partialPivLu().determinant();
}

const char* to_string(InvariantRoute route) {
  return route == InvariantRoute::Determinant ? "determinant" : "curvature-volume";
}

InvariantSequence invariant_sequence(const PointList& vertices, const OneStress& alpha, const SpaceForm& space,
                                     const std::optional<Point>& p, const std::optional<Point>& q,
                                     const QuadratureConfig& quad) {
  const int count = static_cast<int>(vertices.size());
  if (count < 3 || alpha.size() != count) throw InputError("invariant_sequence: stress length does not match vertices");
  const int n = count - 2;
  const Point& pp = p ? *p : vertices[static_cast<std::size_t>(n)];
  const Point& qq = q ? *q : vertices[static_cast<std::size_t>(n) + 1];
  if (pp.size() != space.ambient_dim() || qq.size() != space.ambient_dim()) {
    throw InputError("probe points have the wrong coordinate length");
  }

  InvariantSequence inv;
  inv.c.assign(static_cast<std::size_t>(n) + 2, 0.0);
  inv.error.assign(inv.c.size(), 0.0);
  inv.c[0] = 1.0;

  for (int k = 0; k <= n; ++k) {
    double sum = 0.0;
    double err = 0.0;
    for (const Face& f : faces_of_dim(count, k)) {
      double prod = 1.0;
      for (int v : f.vertices) prod *= alpha[v];
      const PointList pts = face_points(f, vertices);
      if (!space.curved()) {
        sum += prod * d_face(pts, pp, qq);
      } else {
        const double weight = prod * face_norm(pts, space);
        const VolumeResult vol = simplex_volume(pts, space, quad);
        sum += weight * vol.value;
        err += std::abs(weight) * vol.error_estimate;
      }
    }
    if (space.curved()) {
      const double factor = space.curvature() * (k + 2) * factorial(k);
      sum *= factor;
      err *= std::abs(factor);
    }
    inv.c[static_cast<std::size_t>(k) + 1] = sum;
    inv.error[static_cast<std::size_t>(k) + 1] = err;
  }

  if (space.curved()) {
    inv.route = InvariantRoute::CurvatureVolume;
    double c1 = 0.0;
    for (int i = 0; i < count; ++i) c1 += alpha[i] * g_point(vertices[static_cast<std::size_t>(i)], pp, qq, space);
    inv.c1_g_route = c1;
  }
  return inv;
}

CharPoly characteristic_polynomial(const InvariantSequence& inv, const RootTolerances& tol) {
  if (inv.c.empty()) throw InputError("characteristic_polynomial: empty sequence");
  CharPoly out;
  const std::size_t deg = inv.c.size() - 1;
  out.coeffs.resize(inv.c.size());
  for (std::size_t i = 0; i <= deg; ++i) out.coeffs[i] = (i % 2 == 0 ? 1.0 : -1.0) * inv.c[i] / inv.c[0];

  if (deg >= 1) {
    // Eigen wants lowest degree first.
    Eigen::VectorXd low(static_cast<Eigen::Index>(deg) + 1);
    for (std::size_t i = 0; i <= deg; ++i) low(static_cast<Eigen::Index>(i)) = out.coeffs[deg - i];
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(low);
    for (Eigen::Index i = 0; i < solver.roots().size(); ++i) out.roots.push_back(solver.roots()(i));
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });

  for (const auto& r : out.roots) {
    const double mod = std::abs(r);
    if (mod < tol.zero_tol) {
      ++out.zero_roots;
      continue;
    }
    out.max_imag_ratio = std::max(out.max_imag_ratio, std::abs(r.imag()) / mod);
  }
  out.all_real = out.max_imag_ratio < tol.imag_rel_tol;
  if (!out.all_real) {
    out.diagnostic = "complex roots retained: max |Im|/|root| = " + std::to_string(out.max_imag_ratio);
  }
  return out;
}

double charpoly_matrix_check(const PointList& vertices, const OneStress& alpha) {
  const int count = static_cast<int>(vertices.size());
  const int n = count - 2;
  if (n < 2) throw InputError("charpoly_matrix_check needs n >= 2");
  if (alpha.size() != count) throw InputError("charpoly_matrix_check: stress length does not match vertices");
  const PointList a = intrinsic_coordinates(vertices);
  if (static_cast<int>(a.front().size()) != n) throw InputError("charpoly_matrix_check: configuration is not n-dimensional");

  Eigen::MatrixXd c1(n, n), c2(n, n);
  for (int i = 0; i < n; ++i) {
    c1.row(i) = (a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(n)]).transpose();
    c2.row(i) = (a[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(n) + 1]).transpose();
  }
  const Eigen::VectorXd d = alpha.alpha.head(n);
  const std::vector<double> matrix_poly = characteristic_coefficients(c1 * c2.transpose() * d.asDiagonal());

  const InvariantSequence inv = invariant_sequence(vertices, alpha, SpaceForm::euclidean(static_cast<int>(vertices.front().size())));
  const CharPoly f = characteristic_polynomial(inv);
  double worst = 0.0;
  for (std::size_t i = 0; i < matrix_poly.size(); ++i) worst = std::max(worst, std::abs(matrix_poly[i] - f.coeffs[i]));
  return worst;
}

}  // namespace simplexlift
