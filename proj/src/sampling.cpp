#include "simplexlift/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexlift/errors.hpp"

namespace simplexlift {

namespace {

double facet_shape(const PointList& facet, const SpaceForm& space) {
  return space.curved() ? linear_shape_ratio(facet) : flat_shape_ratio(facet);
}

/// Boost along unit spatial direction u with rapidity phi, on Lorentzian R^{d,1}.
Point boost(const Point& x, const Eigen::VectorXd& u, double phi) {
  const Eigen::VectorXd xs = x.tail(x.size() - 1);
  const double along = u.dot(xs);
  Point out(x.size());
  out(0) = std::cosh(phi) * x(0) + std::sinh(phi) * along;
  out.tail(x.size() - 1) = xs + ((std::cosh(phi) - 1.0) * along + std::sinh(phi) * x(0)) * u;
  return out;
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

Point random_gaussian(int dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Point p(dim);
  for (int i = 0; i < dim; ++i) p(i) = normal(rng);
  return p;
}

Point random_unit_vector(int dim, Rng& rng) {
  while (true) {
    const Point p = random_gaussian(dim, rng);
    const double len = p.norm();
    if (len > 1e-6) return p / len;
  }
}

Eigen::MatrixXd random_orthonormal(int rows, int cols, Rng& rng) {
  if (cols > rows) throw InputError("random_orthonormal: more columns than rows");
  Eigen::MatrixXd g(rows, rows);
  for (int j = 0; j < rows; ++j) g.col(j) = random_gaussian(rows, rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  // Sign fix makes the distribution Haar.
  const Eigen::MatrixXd r = qr.matrixQR();
  for (int j = 0; j < rows; ++j) {
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  }
  return q.leftCols(cols);
}

Point random_space_point(const SpaceForm& space, Rng& rng, double spread) {
  switch (space.curvature()) {
    case 0: return spread * random_gaussian(space.dim(), rng);
    case 1: return random_unit_vector(space.dim() + 1, rng);
    default: {
      const Eigen::VectorXd y = spread * random_gaussian(space.dim(), rng);
      Point x(space.dim() + 1);
      x(0) = std::sqrt(1.0 + y.squaredNorm());
      x.tail(space.dim()) = y;
      return x;
    }
  }
}

PointList random_embedding(const PointList& points, const SpaceForm& from, const SpaceForm& to, Rng& rng) {
  if (from.curvature() != to.curvature()) throw InputError("random_embedding: curvature mismatch");
  if (to.dim() < from.dim()) throw InputError("random_embedding: target dimension is smaller");
  PointList out;
  out.reserve(points.size());
  if (to.curvature() == 0) {
    const Eigen::MatrixXd frame = random_orthonormal(to.dim(), from.dim(), rng);
    const Point offset = 0.5 * random_gaussian(to.dim(), rng);
    for (const auto& p : points) out.push_back(frame * p + offset);
  } else if (to.curvature() > 0) {
    const Eigen::MatrixXd frame = random_orthonormal(to.dim() + 1, from.dim() + 1, rng);
    for (const auto& p : points) out.push_back(frame * p);
  } else {
    const Eigen::MatrixXd rot = random_orthonormal(to.dim(), from.dim(), rng);
    const Eigen::VectorXd dir = random_unit_vector(to.dim(), rng);
    std::uniform_real_distribution<double> rapidity(0.0, 0.5);
    const double phi = rapidity(rng);
    for (const auto& p : points) {
      Point x(to.dim() + 1);
      x(0) = p(0);
      x.tail(to.dim()) = rot * p.tail(from.dim());
      out.push_back(to_space(boost(x, dir, phi), to, 1e-6));
    }
  }
  return out;
}

DegenerateSample random_degenerate(const SpaceForm& space, int n, Rng& rng, CaseFilter filter,
                                   const SampleQuality& quality) {
  if (n < 1 || n > space.dim()) throw InputError("random_degenerate: need 1 <= n <= dim");
  if (filter == CaseFilter::CaseZero && space.curvature() != 1) {
    throw InputError("random_degenerate: case 0 exists on the sphere only");
  }
  const SpaceForm low = space.with_dim(n);
  DegenerateSample out;
  for (int attempt = 0; attempt < quality.max_attempts; ++attempt) {
    PointList pts;
    for (int i = 0; i < n + 2; ++i) pts.push_back(random_space_point(low, rng, 0.8));
    OneStress alpha;
    try {
      alpha = solve_one_stress(pts, low);
    } catch (const AssumptionViolation&) {
      ++out.rejected;
      continue;
    }
    const double amax = alpha.alpha.cwiseAbs().maxCoeff();
    const double amin = alpha.alpha.cwiseAbs().minCoeff();
    const bool all_positive = (alpha.alpha.array() > 0.0).all();
    bool ok = amin >= quality.min_alpha_ratio * amax;
    if (filter == CaseFilter::CaseZero) ok = ok && all_positive;
    if (filter == CaseFilter::ExcludeCaseZero) ok = ok && !all_positive;
    for (int i = 0; ok && i < n + 2; ++i) {
      ok = facet_shape(face_points(facet_omitting(n + 2, i), pts), low) >= quality.min_facet_shape;
    }
    if (!ok) {
      ++out.rejected;
      continue;
    }
    out.vertices = space.dim() == n ? pts : random_embedding(pts, low, space, rng);
    out.alpha = solve_one_stress(out.vertices, space);
    return out;
  }
  throw InternalConsistencyError("random_degenerate: no acceptable sample after " +
                                 std::to_string(quality.max_attempts) + " attempts");
}

PointList random_simplex(const SpaceForm& space, int k, Rng& rng, double min_shape) {
  if (k < 0 || k > space.dim()) throw InputError("random_simplex: need 0 <= k <= dim");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    PointList pts;
    for (int i = 0; i <= k; ++i) pts.push_back(random_space_point(space, rng, 0.8));
    bool ok = facet_shape(pts, space) >= min_shape;
    for (int i = 0; ok && i <= k && k >= 1; ++i) {
      ok = facet_shape(face_points(facet_omitting(k + 1, i), pts), space) >= min_shape;
    }
    if (ok) return pts;
  }
  throw InternalConsistencyError("random_simplex: no acceptable sample");
}

}  // namespace simplexlift
