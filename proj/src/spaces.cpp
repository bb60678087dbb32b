#include "simplexlift/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "simplexlift/errors.hpp"
#include "simplexlift/linalg.hpp"

namespace simplexlift {

namespace {

constexpr double kDegenerateShape = 1e-12;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

void check_lengths(const PointList& pts, Eigen::Index len, const char* where) {
  for (const auto& p : pts) {
    if (p.size() != len) {
      throw InputError(std::string(where) + ": expected " + std::to_string(len) +
                       " coordinates, got " + std::to_string(p.size()));
    }
  }
}

/// |prod R_ii| / prod |column| of the QR of the given columns; 0 if any column vanishes.
double column_shape_ratio(const Eigen::MatrixXd& cols) {
  if (cols.cols() == 0) return 1.0;
  if (cols.cols() > cols.rows()) return 0.0;
  double lengths = 1.0;
  for (Eigen::Index j = 0; j < cols.cols(); ++j) lengths *= cols.col(j).norm();
  if (lengths == 0.0) return 0.0;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(cols);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(cols.cols()).triangularView<Eigen::Upper>();
  return std::abs(r.diagonal().prod()) / lengths;
}

Eigen::MatrixXd edge_matrix(const PointList& vertices) {
  const Eigen::Index k = static_cast<Eigen::Index>(vertices.size()) - 1;
  Eigen::MatrixXd e(vertices.front().size(), k);
  for (Eigen::Index i = 0; i < k; ++i) e.col(i) = vertices[static_cast<std::size_t>(i) + 1] - vertices[0];
  return e;
}

Eigen::MatrixXd vertex_matrix(const PointList& vertices) {
  Eigen::MatrixXd m(vertices.front().size(), static_cast<Eigen::Index>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vertices[i];
  return m;
}

/// Pulls a point that is already close to the quadric exactly onto it.
Point renormalize(const Point& x, const SpaceForm& space) {
  const double q = metric_dot(x, x, space);
  if (space.curvature() > 0) return x / std::sqrt(q);
  return x / std::sqrt(-q);
}

}  // namespace

SpaceForm::SpaceForm(int curvature, int dim) : curvature_(curvature), dim_(dim) {
  if (curvature < -1 || curvature > 1) throw InputError("curvature must be -1, 0 or +1");
  if (dim < 1) throw InputError("space dimension must be positive");
}

bool Face::contains(int v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

std::vector<Face> faces_of_dim(int vertex_count, int k) {
  std::vector<Face> out;
  const int size = k + 1;
  if (size < 0 || size > vertex_count) return out;
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(Face{idx});
    int pos = size - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == vertex_count - size + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
  }
  return out;
}

Face facet_omitting(int vertex_count, int i) {
  Face f;
  for (int v = 0; v < vertex_count; ++v) {
    if (v != i) f.vertices.push_back(v);
  }
  return f;
}

PointList face_points(const Face& face, const PointList& vertices) {
  PointList out;
  out.reserve(face.vertices.size());
  for (int v : face.vertices) {
    if (v < 0 || static_cast<std::size_t>(v) >= vertices.size()) throw InputError("face index out of range");
    out.push_back(vertices[static_cast<std::size_t>(v)]);
  }
  return out;
}

double metric_dot(const Point& x, const Point& y, const SpaceForm& space) {
  if (x.size() != y.size() || x.size() != space.ambient_dim()) {
    throw InputError("metric_dot: coordinate length mismatch (expected " + std::to_string(space.ambient_dim()) + ")");
  }
  if (space.curvature() < 0) return x.dot(y) - 2.0 * x(0) * y(0);
  return x.dot(y);
}

Eigen::MatrixXd metric_gram(const PointList& vectors, const SpaceForm& space) {
  const Eigen::Index m = static_cast<Eigen::Index>(vectors.size());
  Eigen::MatrixXd g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      g(i, j) = g(j, i) = metric_dot(vectors[static_cast<std::size_t>(i)], vectors[static_cast<std::size_t>(j)], space);
    }
  }
  return g;
}

Point to_space(const Point& raw, const SpaceForm& space, double tolerance) {
  if (raw.size() != space.ambient_dim()) {
    throw InputError("point has " + std::to_string(raw.size()) + " coordinates, expected " +
                     std::to_string(space.ambient_dim()));
  }
  if (!raw.allFinite()) throw InputError("point has non-finite coordinates");
  if (!space.curved()) return raw;
  const double q = metric_dot(raw, raw, space);
  const double kappa = space.curvature();
  if (std::abs(q - kappa) > tolerance) {
    throw InputError("point is off the quadric: x.x = " + std::to_string(q) + ", expected " +
                     std::to_string(space.curvature()));
  }
  if (kappa < 0 && raw(0) <= 0.0) throw InputError("point is on the lower sheet of the hyperboloid");
  return renormalize(raw, space);
}

PointList to_space(const PointList& raw, const SpaceForm& space, double tolerance) {
  PointList out;
  out.reserve(raw.size());
  for (const auto& p : raw) out.push_back(to_space(p, space, tolerance));
  return out;
}

double gram_norm(const PointList& vertices, const SpaceForm& space) {
  if (!space.curved()) throw UnsupportedError("gram_norm is defined for curved spaces only");
  if (vertices.empty()) return 1.0;
  const Eigen::MatrixXd g = metric_gram(vertices, space);
  return std::sqrt(std::abs(g.fullPivLu().determinant()));
}

double face_norm(const PointList& vertices, const SpaceForm& space) {
  if (vertices.empty()) return 1.0;
  check_lengths(vertices, space.ambient_dim(), "face_norm");
  const double shape = space.curved() ? column_shape_ratio(vertex_matrix(vertices)) : flat_shape_ratio(vertices);
  if (shape < kDegenerateShape) throw DegenerateFaceError("face_norm: face vertices are dependent");
  return space.curved() ? gram_norm(vertices, space) : flat_simplex_measure(vertices);
}

double unit_sphere_volume(int n) {
  if (n < 0) throw InputError("unit_sphere_volume: negative dimension");
  const double h = 0.5 * (n + 1);
  return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

const char* to_string(VolumeMethod method) {
  switch (method) {
    case VolumeMethod::Point: return "point";
    case VolumeMethod::GramDeterminant: return "gram-determinant";
    case VolumeMethod::ArcLength: return "arc-length";
    case VolumeMethod::AngleExcess: return "angle-excess";
    case VolumeMethod::Quadrature: return "quadrature";
    case VolumeMethod::MonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

double flat_simplex_measure(const PointList& vertices) {
  if (vertices.size() <= 1) return 1.0;
  const Eigen::MatrixXd e = edge_matrix(vertices);
  if (e.cols() > e.rows()) return 0.0;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(e);
  return std::abs(qr.matrixQR().diagonal().head(e.cols()).prod());
}

double flat_shape_ratio(const PointList& vertices) {
  if (vertices.size() <= 1) return 1.0;
  return column_shape_ratio(edge_matrix(vertices));
}

double linear_shape_ratio(const PointList& vertices) {
  if (vertices.empty()) return 1.0;
  return column_shape_ratio(vertex_matrix(vertices));
}

VolumeResult simplex_volume(const PointList& vertices, const SpaceForm& space, const QuadratureConfig& quad) {
  if (vertices.empty()) throw InputError("simplex_volume: no vertices");
  check_lengths(vertices, space.ambient_dim(), "simplex_volume");
  const int k = static_cast<int>(vertices.size()) - 1;
  if (k == 0) return {1.0, 0.0, VolumeMethod::Point};

  if (!space.curved()) {
    if (flat_shape_ratio(vertices) < kDegenerateShape) {
      throw DegenerateFaceError("simplex_volume: vertices do not span a " + std::to_string(k) + "-simplex");
    }
    return {flat_simplex_measure(vertices) / factorial(k), 0.0, VolumeMethod::GramDeterminant};
  }

  if (column_shape_ratio(vertex_matrix(vertices)) < kDegenerateShape) {
    throw DegenerateFaceError("simplex_volume: vertices do not span a " + std::to_string(k) + "-simplex");
  }
  const double kappa = space.curvature();
  if (k == 1) {
    const Point diff = vertices[1] - vertices[0];
    const double chord2 = std::max(metric_dot(diff, diff, space), 0.0);
    const double len = kappa > 0 ? 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(chord2)))
                                 : 2.0 * std::asinh(0.5 * std::sqrt(chord2));
    return {len, 0.0, VolumeMethod::ArcLength};
  }
  if (k == 2) {
    const Point& a = vertices[0];
    const Point& b = vertices[1];
    const Point& c = vertices[2];
    // tan(E/2) = ||F|| / (1 + kappa (a.b + b.c + c.a)), E the angle excess or defect.
    const double denom = 1.0 + kappa * (metric_dot(a, b, space) + metric_dot(b, c, space) + metric_dot(c, a, space));
    return {2.0 * std::atan2(gram_norm(vertices, space), denom), 0.0, VolumeMethod::AngleExcess};
  }
  if (k == 3) return curved_volume_quadrature(vertices, space, quad);
  throw UnsupportedError("curved simplex volumes are supported up to dimension 3, got " + std::to_string(k));
}

Point reflect_through_span(const Point& p, const PointList& span_points, const SpaceForm& space) {
  if (span_points.empty()) throw InputError("reflect_through_span: empty span");
  check_lengths(span_points, space.ambient_dim(), "reflect_through_span");
  if (p.size() != space.ambient_dim()) throw InputError("reflect_through_span: point has the wrong length");

  if (!space.curved()) {
    if (flat_shape_ratio(span_points) < kDegenerateShape) {
      throw InputError("reflect_through_span: span points are affinely dependent");
    }
    const AffineFrame frame = affine_frame(span_points);
    const Point proj = frame.embed(frame.coordinates(p));
    return 2.0 * proj - p;
  }

  if (column_shape_ratio(vertex_matrix(span_points)) < kDegenerateShape) {
    throw InputError("reflect_through_span: span points are linearly dependent");
  }
  const Eigen::MatrixXd g = metric_gram(span_points, space);
  Eigen::VectorXd rhs(g.rows());
  for (Eigen::Index i = 0; i < rhs.size(); ++i) rhs(i) = metric_dot(span_points[static_cast<std::size_t>(i)], p, space);
  const Eigen::VectorXd coef = g.fullPivLu().solve(rhs);
  Point proj = Point::Zero(p.size());
  for (Eigen::Index i = 0; i < coef.size(); ++i) proj += coef(i) * span_points[static_cast<std::size_t>(i)];
  return renormalize(2.0 * proj - p, space);
}

double geodesic_distance(const Point& x, const Point& y, const SpaceForm& space) {
  const Point diff = x - y;
  const double chord2 = std::max(metric_dot(diff, diff, space), 0.0);
  switch (space.curvature()) {
    case 0: return std::sqrt(chord2);
    case 1: return 2.0 * std::asin(std::min(1.0, 0.5 * std::sqrt(chord2)));
    default: return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
  }
}

Point inward_unit_normal(const PointList& f_points, const Point& extra, const SpaceForm& space) {
  Point u;
  if (!space.curved()) {
    const AffineFrame frame = affine_frame(f_points);
    u = extra - frame.embed(frame.coordinates(extra));
  } else {
    const Eigen::MatrixXd g = metric_gram(f_points, space);
    Eigen::VectorXd rhs(g.rows());
    for (Eigen::Index i = 0; i < rhs.size(); ++i) rhs(i) = metric_dot(f_points[static_cast<std::size_t>(i)], extra, space);
    const Eigen::VectorXd coef = g.fullPivLu().solve(rhs);
    u = extra;
    for (Eigen::Index i = 0; i < coef.size(); ++i) u -= coef(i) * f_points[static_cast<std::size_t>(i)];
  }
  const double len2 = metric_dot(u, u, space);
  if (!(len2 > 0.0) || std::sqrt(len2) < 1e-12 * std::max(1.0, extra.norm())) {
    throw DegenerateFaceError("inward normal undefined: face is degenerate");
  }
  return u / std::sqrt(len2);
}

}  // namespace simplexlift
