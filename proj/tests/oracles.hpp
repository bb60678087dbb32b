#pragma once

// Reference computations that share no code with the library: Cayley-Menger
// volumes, angle-sum areas, brute-force invariants from their determinant
// definition. Used as independent oracles in the unit tests.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Vec = Eigen::VectorXd;
using Pts = std::vector<Vec>;

inline double factorial(int k) { return k <= 1 ? 1.0 : k * factorial(k - 1); }

/// k-volume of the simplex on k+1 points from squared distances alone.
inline double cayley_menger_volume(const Pts& p) {
  const int m = static_cast<int>(p.size());
  const int k = m - 1;
  Eigen::MatrixXd cm = Eigen::MatrixXd::Ones(m + 1, m + 1);
  cm(0, 0) = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) cm(i + 1, j + 1) = (p[i] - p[j]).squaredNorm();
  }
  const double sign = (k + 1) % 2 == 0 ? 1.0 : -1.0;
  const double v2 = sign * cm.determinant() / (std::pow(2.0, k) * factorial(k) * factorial(k));
  return std::sqrt(std::max(0.0, v2));
}

inline double lorentz(const Vec& x, const Vec& y) { return x.dot(y) - 2.0 * x(0) * y(0); }

/// Interior angle at a of the geodesic triangle abc, from tangent vectors.
inline double vertex_angle(const Vec& a, const Vec& b, const Vec& c, int kappa) {
  auto dot = [kappa](const Vec& x, const Vec& y) { return kappa < 0 ? lorentz(x, y) : x.dot(y); };
  const double s = kappa > 0 ? 1.0 : -1.0;  // <a, a>
  const Vec tb = b - (dot(a, b) / s) * a;
  const Vec tc = c - (dot(a, c) / s) * a;
  const double cosine = dot(tb, tc) / std::sqrt(dot(tb, tb) * dot(tc, tc));
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

/// Girard: spherical excess; hyperbolic: angle defect.
inline double triangle_area_from_angles(const Vec& a, const Vec& b, const Vec& c, int kappa) {
  const double sum = vertex_angle(a, b, c, kappa) + vertex_angle(b, c, a, kappa) + vertex_angle(c, a, b, kappa);
  return kappa > 0 ? sum - std::numbers::pi : std::numbers::pi - sum;
}

inline double arc_length(const Vec& a, const Vec& b, int kappa) {
  if (kappa > 0) return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
  return std::acosh(std::max(1.0, -lorentz(a, b)));
}

/// c_k = sum over k-subsets F of prod alpha * det((A_i - P).(A_j - Q))_{i,j in F}.
inline std::vector<double> invariants(const Pts& a, const std::vector<double>& alpha, const Vec& p, const Vec& q) {
  const int m = static_cast<int>(a.size());
  std::vector<double> c(m, 0.0);
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<int> f;
    for (int i = 0; i < m; ++i) {
      if (mask & (1 << i)) f.push_back(i);
    }
    const int k = static_cast<int>(f.size());
    if (k == m) continue;
    double w = 1.0;
    Eigen::MatrixXd g(k, k);
    for (int i = 0; i < k; ++i) {
      w *= alpha[f[i]];
      for (int j = 0; j < k; ++j) g(i, j) = (a[f[i]] - p).dot(a[f[j]] - q);
    }
    c[k] += k == 0 ? 1.0 : w * g.determinant();
  }
  return c;
}

/// Circumcenter of three points in the plane.
inline Vec circumcenter(const Vec& a, const Vec& b, const Vec& c) {
  Eigen::Matrix2d m;
  m << 2 * (b - a).transpose(), 2 * (c - a).transpose();
  const Eigen::Vector2d rhs(b.squaredNorm() - a.squaredNorm(), c.squaredNorm() - a.squaredNorm());
  return m.colPivHouseholderQr().solve(rhs);
}

}  // namespace oracle
