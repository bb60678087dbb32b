#include "simplexlift/linalg.hpp"

#include <cmath>

#include "simplexlift/errors.hpp"

namespace simplexlift {

AffineFrame affine_frame(const PointList& points, double rel_tol) {
  if (points.empty()) throw InputError("affine_frame: empty point set");
  const Eigen::Index dim = points.front().size();
  Eigen::MatrixXd diffs(dim, static_cast<Eigen::Index>(points.size()) - 1);
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != dim) throw InputError("affine_frame: mixed coordinate lengths");
    diffs.col(static_cast<Eigen::Index>(i) - 1) = points[i] - points[0];
  }
  AffineFrame frame{points[0], Eigen::MatrixXd(dim, 0)};
  if (diffs.cols() == 0) return frame;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diffs, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return frame;
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > rel_tol * sv(0)) ++rank;
  frame.basis = svd.matrixU().leftCols(rank);
  return frame;
}

PointList intrinsic_coordinates(const PointList& points, double rel_tol) {
  const AffineFrame frame = affine_frame(points, rel_tol);
  PointList out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(frame.coordinates(p));
  return out;
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, double rel_tol) {
  const Eigen::Index cols = m.cols();
  // Pad to at least square so that the full V is well defined.
  Eigen::MatrixXd padded = Eigen::MatrixXd::Zero(std::max(m.rows(), cols), cols);
  padded.topRows(m.rows()) = m;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(padded, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0) {
    while (rank < sv.size() && sv(rank) > rel_tol * sv(0)) ++rank;
  }
  return svd.matrixV().rightCols(cols - rank);
}

Eigen::VectorXd cofactor_normal(const Eigen::MatrixXd& rows) {
  const Eigen::Index n = rows.rows();
  if (rows.cols() != n + 1) throw InputError("cofactor_normal: expected an n x (n+1) matrix");
  Eigen::VectorXd normal(n + 1);
  Eigen::MatrixXd minor(n, n);
  for (Eigen::Index j = 0; j <= n; ++j) {
    for (Eigen::Index c = 0, mc = 0; c <= n; ++c) {
      if (c == j) continue;
      minor.col(mc++) = rows.col(c);
    }
    const double det = n == 0 ? 1.0 : minor.partialPivLu().determinant();
    normal(j) = (j % 2 == 0 ? 1.0 : -1.0) * det;
  }
  return normal;
}

std::vector<double> characteristic_coefficients(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw InputError("characteristic_coefficients: matrix is not square");
  std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
  coeffs[0] = 1.0;
  Eigen::MatrixXd mk = Eigen::MatrixXd::Zero(n, n);
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk + coeffs[static_cast<std::size_t>(k) - 1] * id;
    coeffs[static_cast<std::size_t>(k)] = -(m * mk).trace() / static_cast<double>(k);
  }
  return coeffs;
}

double similarity_residual(const PointList& moving, const PointList& target) {
  if (moving.size() != target.size() || moving.empty()) {
    throw InputError("similarity_residual: point sets differ in size");
  }
  const Eigen::Index count = static_cast<Eigen::Index>(moving.size());
  const Eigen::Index dim = target.front().size();
  if (moving.front().size() != dim) throw InputError("similarity_residual: dimension mismatch");

  Eigen::MatrixXd x(count, dim), y(count, dim);
  for (Eigen::Index i = 0; i < count; ++i) {
    x.row(i) = moving[static_cast<std::size_t>(i)].transpose();
    y.row(i) = target[static_cast<std::size_t>(i)].transpose();
  }
  x.rowwise() -= x.colwise().mean();
  y.rowwise() -= y.colwise().mean();
  const double ynorm = y.norm();
  if (ynorm == 0.0) throw InputError("similarity_residual: target points coincide");
  const double xnorm2 = x.squaredNorm();
  if (xnorm2 == 0.0) return 1.0;

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(x.transpose() * y, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::MatrixXd rotation = svd.matrixU() * svd.matrixV().transpose();
  const double scale = svd.singularValues().sum() / xnorm2;
  return (scale * x * rotation - y).norm() / ynorm;
}

}  // namespace simplexlift
