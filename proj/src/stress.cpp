#include "simplexlift/stress.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexlift/errors.hpp"
#include "simplexlift/linalg.hpp"

namespace simplexlift {

namespace {

/// Columns are the vertices; flat vertices are centred, scaled to unit size
/// and stacked over a row of ones (same null space, better conditioning).
Eigen::MatrixXd dependence_matrix(const PointList& vertices, const SpaceForm& space) {
  const Eigen::Index m = static_cast<Eigen::Index>(vertices.size());
  const Eigen::Index dim = space.ambient_dim();
  for (const auto& p : vertices) {
    if (p.size() != dim) throw InputError("vertex has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(dim));
  }
  if (space.curved()) {
    Eigen::MatrixXd a(dim, m);
    for (Eigen::Index j = 0; j < m; ++j) a.col(j) = vertices[static_cast<std::size_t>(j)];
    return a;
  }
  Point centroid = Point::Zero(dim);
  for (const auto& p : vertices) centroid += p;
  centroid /= static_cast<double>(m);
  double scale = 0.0;
  for (const auto& p : vertices) scale = std::max(scale, (p - centroid).norm());
  if (scale == 0.0) scale = 1.0;
  Eigen::MatrixXd a(dim + 1, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    a.col(j).head(dim) = (vertices[static_cast<std::size_t>(j)] - centroid) / scale;
    a(dim, j) = 1.0;
  }
  return a;
}

}  // namespace

OneStress normalize_stress(const Eigen::VectorXd& raw) {
  if (raw.size() == 0 || !raw.allFinite()) throw InputError("stress coefficients must be finite");
  const double norm = raw.norm();
  if (norm == 0.0) throw InputError("stress coefficients are all zero");
  Eigen::VectorXd a = raw / norm;
  const auto positives = (a.array() > 0.0).count();
  const auto negatives = (a.array() < 0.0).count();
  if (negatives > positives || (negatives == positives && a(0) < 0.0)) a = -a;
  return OneStress{a};
}

OneStress solve_one_stress(const PointList& vertices, const SpaceForm& space, double rank_tol) {
  if (vertices.size() < 3) throw InputError("need at least three vertices (n >= 1)");
  const Eigen::MatrixXd a = dependence_matrix(vertices, space);
  const Eigen::MatrixXd ns = null_space(a, rank_tol);
  if (ns.cols() == 0) {
    throw NotDegenerateError("configuration is not degenerate: the vertices are " +
                             std::string(space.curved() ? "linearly" : "affinely") + " independent");
  }
  if (ns.cols() >= 2) {
    throw DegenerateFaceError("dependence space has dimension " + std::to_string(ns.cols()) +
                              ": some facet is degenerate");
  }
  const OneStress s = normalize_stress(ns.col(0));
  for (int i = 0; i < s.size(); ++i) {
    if (std::abs(s[i]) < rank_tol) {
      throw DegenerateFaceError("facet F_" + std::to_string(i + 1) + " is degenerate (alpha_" + std::to_string(i + 1) +
                                    " vanishes)",
                                i);
    }
  }
  return s;
}

double one_stress_residual(const OneStress& alpha, const PointList& vertices, const SpaceForm& space) {
  if (static_cast<std::size_t>(alpha.size()) != vertices.size()) throw InputError("stress length does not match vertices");
  Point sum = Point::Zero(space.ambient_dim());
  double scale = 1.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    sum += alpha[static_cast<int>(i)] * vertices[i];
    scale = std::max(scale, vertices[i].norm());
  }
  double res = sum.norm() / scale;
  if (!space.curved()) res = std::max(res, std::abs(alpha.alpha.sum()));
  return res;
}

KStress induce_stress(const OneStress& alpha, const PointList& vertices, int face_dim, const SpaceForm& space) {
  const int count = static_cast<int>(vertices.size());
  if (alpha.size() != count) throw InputError("stress length does not match vertices");
  if (face_dim < 0 || face_dim > count - 2) throw InputError("induced stress face dimension out of range");
  KStress out;
  out.order = face_dim + 1;
  for (const Face& f : faces_of_dim(count, face_dim)) {
    double prod = 1.0;
    for (int v : f.vertices) prod *= alpha[v];
    out.values.emplace(f, prod * face_norm(face_points(f, vertices), space));
  }
  return out;
}

double stress_residual(const KStress& omega, const PointList& vertices, const SpaceForm& space) {
  if (omega.order < 2) throw InputError("the equilibrium condition needs a k-stress with k >= 2");
  const int count = static_cast<int>(vertices.size());
  double worst = 0.0;
  for (const Face& f : faces_of_dim(count, omega.order - 2)) {
    const PointList f_points = face_points(f, vertices);
    Point sum = Point::Zero(space.ambient_dim());
    for (int v = 0; v < count; ++v) {
      if (f.contains(v)) continue;
      Face g = f;
      g.vertices.insert(std::upper_bound(g.vertices.begin(), g.vertices.end(), v), v);
      const auto it = omega.values.find(g);
      const double w = it == omega.values.end() ? 0.0 : it->second;
      if (w == 0.0) continue;
      sum += w * inward_unit_normal(f_points, vertices[static_cast<std::size_t>(v)], space);
    }
    worst = std::max(worst, std::sqrt(std::max(0.0, metric_dot(sum, sum, space))));
  }
  return worst;
}

RadonPartition radon_partition(const OneStress& alpha, const SpaceForm& space) {
  RadonPartition p;
  for (int i = 0; i < alpha.size(); ++i) (alpha[i] > 0.0 ? p.x1 : p.x2).push_back(i);
  if (p.x2.empty()) {
    if (space.curvature() != 1) {
      throw InternalConsistencyError("all stress coefficients share a sign outside the sphere");
    }
    p.case_id = 0;
    p.target = unit_sphere_volume(alpha.size() - 2);
  } else {
    p.case_id = p.x2.size() == 1 ? 1 : 2;
  }
  return p;
}

PartitionSums partition_sums(const PointList& vertices, const RadonPartition& partition, const SpaceForm& space,
                             const QuadratureConfig& quad) {
  const int count = static_cast<int>(vertices.size());
  PartitionSums out;
  out.facets.reserve(vertices.size());
  for (int i = 0; i < count; ++i) {
    try {
      out.facets.push_back(simplex_volume(face_points(facet_omitting(count, i), vertices), space, quad));
    } catch (const DegenerateFaceError& e) {
      throw DegenerateFaceError("facet F_" + std::to_string(i + 1) + ": " + e.what(), i);
    }
    out.error_estimate += out.facets.back().error_estimate;
  }
  for (int i : partition.x1) out.sum1 += out.facets[static_cast<std::size_t>(i)].value;
  for (int i : partition.x2) out.sum2 += out.facets[static_cast<std::size_t>(i)].value;
  return out;
}

}  // namespace simplexlift
