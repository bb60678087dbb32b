#include "simplexlift/dual.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "simplexlift/errors.hpp"
#include "simplexlift/linalg.hpp"
#include "simplexlift/sampling.hpp"

namespace simplexlift {

namespace {

constexpr double kSingular = 1e-12;

void check_same_shape(const PointList& a, const PointList& b) {
  if (a.size() != b.size() || a.empty()) throw InputError("configurations differ in vertex count");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.front().size() || b[i].size() != a.front().size()) {
      throw InputError("configurations differ in dimension");
    }
  }
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

/// Rows p_i - p_ref for i < n.
Eigen::MatrixXd edge_rows(const PointList& p, int n, int ref) {
  Eigen::MatrixXd m(n, p.front().size());
  for (int i = 0; i < n; ++i) m.row(i) = (p[idx(i)] - p[idx(ref)]).transpose();
  return m;
}

double product_spread(const std::vector<std::complex<double>>& lam, const std::vector<std::complex<double>>& mu) {
  std::complex<double> mean = 0.0;
  for (std::size_t i = 0; i < lam.size(); ++i) mean += lam[i] * mu[i];
  mean /= static_cast<double>(lam.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < lam.size(); ++i) worst = std::max(worst, std::abs(lam[i] * mu[i] - mean));
  return std::abs(mean) > 0.0 ? worst / std::abs(mean) : worst;
}

}  // namespace

DualConfiguration construct_dual(const PointList& a, double c) {
  const int count = static_cast<int>(a.size());
  const int n = count - 2;
  if (n < 2) throw InputError("construct_dual needs n >= 2 (at least four vertices)");
  if (c == 0.0 || !std::isfinite(c)) throw InputError("construct_dual: the constant c must be finite and non-zero");
  const Eigen::Index dim = a.front().size();
  for (const auto& p : a) {
    if (p.size() != dim) throw InputError("construct_dual: mixed coordinate lengths");
  }
  if (dim < n) throw InputError("construct_dual: points live in fewer than n dimensions");

  DualConfiguration out;
  out.c = c;
  out.translation = a[idx(n + 1)];
  if (dim == n) {
    out.frame = Eigen::MatrixXd::Identity(n, n);
  } else {
    const AffineFrame frame = affine_frame(a);
    if (frame.dim() > n) throw NotDegenerateError("configuration is not degenerate: its affine hull exceeds n dimensions");
    if (frame.dim() < n) throw DegenerateFaceError("configuration spans fewer than n dimensions");
    out.frame = frame.basis;
  }
  for (const auto& p : a) out.a.push_back(out.frame.transpose() * (p - out.translation));

  PointList outer(out.a.begin(), out.a.begin() + n + 1);
  if (flat_shape_ratio(outer) < kSingular) {
    throw DegenerateFaceError("facet F_" + std::to_string(n + 2) + " is degenerate", n + 1);
  }

  out.b.assign(idx(count), Point::Zero(n));
  for (int i = 0; i <= n; ++i) {
    PointList rows;
    for (int j = 0; j <= n; ++j) {
      if (j != i) rows.push_back(out.a[idx(j)]);
    }
    if (linear_shape_ratio(rows) < kSingular) {
      throw ConstructionError("dual construction is singular for B_" + std::to_string(i + 1) +
                              ": A_" + std::to_string(n + 2) + " lies on a facet hyperplane of F_" +
                              std::to_string(n + 2));
    }
    Eigen::MatrixXd m(n, n);
    for (int r = 0; r < n; ++r) m.row(r) = rows[idx(r)].transpose();
    out.b[idx(i)] = m.partialPivLu().solve(Eigen::VectorXd::Constant(n, c));
  }
  return out;
}

double duality_residual(const PointList& a, const PointList& b) {
  check_same_shape(a, b);
  const int m = static_cast<int>(a.size());
  double worst = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Point e = a[idx(j)] - a[idx(i)];
      for (int k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        for (int l = k + 1; l < m; ++l) {
          if (l == i || l == j) continue;
          worst = std::max(worst, std::abs(e.dot(b[idx(l)] - b[idx(k)])));
        }
      }
    }
  }
  return worst;
}

RBetaReport compute_r_and_beta(const PointList& a, const PointList& b, const OneStress& alpha, double r_tol) {
  check_same_shape(a, b);
  const int m = static_cast<int>(a.size());
  if (alpha.size() != m) throw InputError("stress length does not match vertices");
  RBetaReport out;
  out.r.resize(idx(m));
  for (int i = 0; i < m; ++i) {
    double lo = INFINITY;
    double hi = -INFINITY;
    double sum = 0.0;
    int samples = 0;
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) {
        if (j == i || k == i || j == k) continue;
        const double v = (a[idx(j)] - a[idx(i)]).dot(b[idx(k)] - b[idx(i)]);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        sum += v;
        ++samples;
      }
    }
    out.r[idx(i)] = sum / samples;
    out.r_spread = std::max(out.r_spread, hi - lo);
  }
  double rmax = 1.0;
  for (double r : out.r) rmax = std::max(rmax, std::abs(r));
  if (out.r_spread > r_tol * rmax) {
    throw DualityViolation("r_i is not constant: spread " + std::to_string(out.r_spread));
  }

  out.beta = solve_one_stress(b, SpaceForm::euclidean(static_cast<int>(b.front().size())));
  out.beta_alpha_deviation = (out.beta.alpha - alpha.alpha).cwiseAbs().maxCoeff();

  std::vector<double> coupling(idx(m));
  for (int i = 0; i < m; ++i) coupling[idx(i)] = alpha[i] * out.r[idx(i)];
  out.coupling = std::accumulate(coupling.begin(), coupling.end(), 0.0) / m;
  const auto [lo, hi] = std::minmax_element(coupling.begin(), coupling.end());
  out.coupling_spread = out.coupling != 0.0 ? (*hi - *lo) / std::abs(out.coupling) : (*hi - *lo);
  return out;
}

MatrixIdentityReport matrix_identities(const PointList& a, const PointList& b, const OneStress& alpha,
                                       const OneStress& beta, const std::vector<double>& r) {
  check_same_shape(a, b);
  const int n = static_cast<int>(a.size()) - 2;
  if (n < 2) throw InputError("matrix_identities needs n >= 2");
  if (a.front().size() != n) throw InputError("matrix_identities needs canonical n-dimensional coordinates");
  if (static_cast<int>(r.size()) < n) throw InputError("matrix_identities: r is too short");

  const Eigen::MatrixXd c1 = edge_rows(a, n, n);
  const Eigen::MatrixXd c2 = edge_rows(a, n, n + 1);
  const Eigen::MatrixXd e1 = edge_rows(b, n, n);
  const Eigen::MatrixXd e2 = edge_rows(b, n, n + 1);
  const Eigen::VectorXd d1 = alpha.alpha.head(n);
  const Eigen::VectorXd d2 = beta.alpha.head(n);

  MatrixIdentityReport out;
  for (const Eigen::MatrixXd& prod : {Eigen::MatrixXd(c1 * e2.transpose()), Eigen::MatrixXd(e1 * c2.transpose())}) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          out.diagonal_vs_r = std::max(out.diagonal_vs_r, std::abs(prod(i, i) - r[idx(i)]));
        } else {
          out.off_diagonal = std::max(out.off_diagonal, std::abs(prod(i, j)));
        }
      }
    }
  }

  const Eigen::MatrixXd p = (c2.transpose() * d1.asDiagonal() * c1) * (e2.transpose() * d2.asDiagonal() * e1);
  out.identity_constant = p.trace() / n;
  const Eigen::MatrixXd dev = p - out.identity_constant * Eigen::MatrixXd::Identity(n, n);
  out.identity_residual = dev.cwiseAbs().maxCoeff() / std::max(std::abs(out.identity_constant), 1e-300);
  return out;
}

ReciprocityReport root_reciprocity(const CharPoly& f, const CharPoly& g) {
  if (f.roots.size() != g.roots.size()) throw DualityViolation("characteristic polynomials differ in degree");
  if (f.zero_roots != 1 || g.zero_roots != 1) {
    throw DualityViolation("expected exactly one zero root, found " + std::to_string(f.zero_roots) + " and " +
                           std::to_string(g.zero_roots));
  }
  // Roots are sorted by modulus, so the zero root comes first.
  std::vector<std::complex<double>> lam(f.roots.begin() + 1, f.roots.end());
  std::vector<std::complex<double>> mu(g.roots.begin() + 1, g.roots.end());
  std::reverse(mu.begin(), mu.end());

  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      for (std::size_t j = i + 1; j < mu.size(); ++j) {
        const double before = product_spread(lam, mu);
        std::swap(mu[i], mu[j]);
        if (product_spread(lam, mu) < before * (1.0 - 1e-12)) {
          improved = true;
        } else {
          std::swap(mu[i], mu[j]);
        }
      }
    }
  }

  ReciprocityReport out;
  std::complex<double> mean = 0.0;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    out.pairs.emplace_back(lam[i], mu[i]);
    mean += lam[i] * mu[i];
  }
  if (lam.empty()) return out;
  mean /= static_cast<double>(lam.size());
  out.c_hat = mean.real();
  out.residual = product_spread(lam, mu);
  return out;
}

SphereFit cocircularity_test(const PointList& points) {
  if (points.empty()) throw InputError("cocircularity_test: no points");
  const int m = static_cast<int>(points.front().size());
  if (static_cast<int>(points.size()) < m + 1) throw InputError("cocircularity_test needs dim + 1 points");
  const PointList base(points.begin(), points.begin() + m + 1);
  if (flat_shape_ratio(base) < kSingular) throw InputError("cocircularity_test: first dim + 1 points are affinely dependent");

  Eigen::MatrixXd lhs(m, m);
  Eigen::VectorXd rhs(m);
  for (int i = 1; i <= m; ++i) {
    lhs.row(i - 1) = 2.0 * (points[idx(i)] - points[0]).transpose();
    rhs(i - 1) = points[idx(i)].squaredNorm() - points[0].squaredNorm();
  }
  SphereFit fit;
  fit.center = lhs.fullPivLu().solve(rhs);
  fit.radius = (points[0] - fit.center).norm();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double dev = (points[i] - fit.center).norm() - fit.radius;
    fit.residual = std::max(fit.residual, std::abs(dev));
    if (static_cast<int>(i) > m && std::abs(dev) >= std::abs(fit.signed_residual)) fit.signed_residual = dev;
  }
  return fit;
}

double affine_dependence_test(const OneStress& alpha, const SpaceForm& space) {
  if (!space.curved()) throw UnsupportedError("affine_dependence_test applies to curved spaces");
  return alpha.alpha.sum();
}

CrossingScan cospherical_crossing_scan(int n, std::uint64_t seed, double grid_step, int half_width) {
  if (n < 2) throw InputError("crossing scan needs n >= 2");
  Rng rng = make_rng(seed, static_cast<std::uint64_t>(n));
  const SpaceForm flat = SpaceForm::euclidean(n);

  // Dual of a cospherical B0; by biduality its own dual is similar to B0.
  PointList a0;
  while (a0.empty()) {
    PointList b0;
    for (int i = 0; i < n + 2; ++i) b0.push_back(random_unit_vector(n, rng));
    try {
      const OneStress beta = solve_one_stress(b0, flat);
      if (beta.alpha.cwiseAbs().minCoeff() < 0.05 * beta.alpha.cwiseAbs().maxCoeff()) continue;
      PointList cand = construct_dual(b0).b;
      const double size = (cand[0] - cand[idx(n + 1)]).norm();
      for (auto& p : cand) p /= size;
      const OneStress alpha = solve_one_stress(cand, flat);
      if (alpha.alpha.cwiseAbs().minCoeff() < 0.05 * alpha.alpha.cwiseAbs().maxCoeff()) continue;
      bool ok = true;
      for (int i = 0; ok && i < n + 2; ++i) ok = flat_shape_ratio(face_points(facet_omitting(n + 2, i), cand)) >= 0.05;
      if (ok) a0 = cand;
    } catch (const AssumptionViolation&) {
      continue;
    }
  }

  CrossingScan scan;
  scan.n = n;
  scan.grid_step = grid_step;
  scan.s_true = (half_width + 0.317) * grid_step;
  const Point dir = random_unit_vector(n, rng);
  for (int j = 0; j <= 2 * half_width; ++j) {
    const double s = j * grid_step;
    PointList a = a0;
    a[0] += (s - scan.s_true) * dir;
    const OneStress alpha = solve_one_stress(a, flat);
    const InvariantSequence inv = invariant_sequence(a, alpha, flat);
    const SphereFit fit = cocircularity_test(construct_dual(a).b);
    scan.s.push_back(s);
    scan.c_nm1.push_back(inv.c[idx(n - 1)]);
    scan.sphere_residual.push_back(fit.signed_residual);
  }

  auto crossing = [&](const std::vector<double>& v) -> std::optional<double> {
    for (std::size_t j = 0; j + 1 < v.size(); ++j) {
      if ((v[j] <= 0.0) != (v[j + 1] <= 0.0)) {
        return scan.s[j] + grid_step * v[j] / (v[j] - v[j + 1]);
      }
    }
    return std::nullopt;
  };
  scan.c_crossing = crossing(scan.c_nm1);
  scan.sphere_crossing = crossing(scan.sphere_residual);
  scan.coincide = scan.c_crossing && scan.sphere_crossing &&
                  std::abs(*scan.c_crossing - *scan.sphere_crossing) <= grid_step;
  return scan;
}

}  // namespace simplexlift
