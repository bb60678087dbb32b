// Curved simplex volumes as integrals of the cone measure.
//
// For vertices v_0..v_k on the quadric, the simplex is the radial projection
// of the flat simplex x(l) = sum l_i v_i, and its volume is
//   V_k = integral over the barycentric simplex of ||F|| / (kappa x.x)^{(k+1)/2}.
// The barycentric simplex is mapped to the unit cube (Duffy), then integrated by
// adaptive tensor Gauss-Kronrod 7/15 with box bisection.

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "simplexlift/errors.hpp"
#include "simplexlift/spaces.hpp"

namespace simplexlift {

namespace {

/// 15 Kronrod nodes on [-1, 1] with Kronrod weights and, on the 7 Gauss
/// nodes, Gauss weights (zero elsewhere).
struct RuleTable {
  std::array<double, 15> x{};
  std::array<double, 15> wk{};
  std::array<double, 15> wg{};
};

const RuleTable& rule() {
  static const RuleTable table = [] {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    const auto& ka = gauss_kronrod<double, 15>::abscissa();
    const auto& kw = gauss_kronrod<double, 15>::weights();
    const auto& ga = gauss<double, 7>::abscissa();
    const auto& gw = gauss<double, 7>::weights();
    RuleTable t;
    // Kronrod index j carries the Gauss node j/2 when j is even.
    auto gauss_weight = [&](std::size_t j) { return j % 2 == 0 ? gw[j / 2] : 0.0; };
    if (ka.size() != 8 || ga.size() != 4) throw InternalConsistencyError("unexpected Gauss-Kronrod table size");
    for (std::size_t j = 0; j < 4; ++j) {
      if (std::abs(ka[2 * j] - ga[j]) > 1e-15) throw InternalConsistencyError("Gauss nodes are not nested");
    }
    std::size_t pos = 0;
    for (std::size_t j = ka.size(); j-- > 1;) {
      t.x[pos] = -ka[j];
      t.wk[pos] = kw[j];
      t.wg[pos] = gauss_weight(j);
      ++pos;
    }
    for (std::size_t j = 0; j < ka.size(); ++j) {
      t.x[pos] = ka[j];
      t.wk[pos] = kw[j];
      t.wg[pos] = gauss_weight(j);
      ++pos;
    }
    return t;
  }();
  return table;
}

struct Integrand {
  const PointList& v;
  const SpaceForm& space;
  double norm;
  int k;

  /// Integrand at cube point u, including the Duffy Jacobian.
  double operator()(const std::vector<double>& u) const {
    double remaining = 1.0;
    double jac = 1.0;
    Point x = Point::Zero(v.front().size());
    for (int i = 0; i < k; ++i) {
      const double lam = u[static_cast<std::size_t>(i)] * remaining;
      x += lam * v[static_cast<std::size_t>(i) + 1];
      jac *= remaining;
      remaining *= 1.0 - u[static_cast<std::size_t>(i)];
    }
    // jac = prod_i prod_{j<i} (1 - u_j), the diagonal of the triangular Duffy Jacobian.
    x += remaining * v[0];
    const double q = space.curvature() * metric_dot(x, x, space);
    return norm * jac / std::pow(q, 0.5 * (k + 1));
  }
};

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;
  int depth = 0;
  double kronrod = 0.0;
  double error = 0.0;
  long id = 0;
};

struct BoxOrder {
  bool operator()(const Box& a, const Box& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.id > b.id;
  }
};

void integrate_box(Box& box, const Integrand& f) {
  const RuleTable& r = rule();
  const int k = f.k;
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  std::vector<double> u(static_cast<std::size_t>(k));
  double half_volume = 1.0;
  for (int d = 0; d < k; ++d) half_volume *= 0.5 * (box.hi[static_cast<std::size_t>(d)] - box.lo[static_cast<std::size_t>(d)]);
  double qk = 0.0;
  double qg = 0.0;
  while (true) {
    double wk = 1.0;
    double wg = 1.0;
    for (int d = 0; d < k; ++d) {
      const auto sd = static_cast<std::size_t>(d);
      const auto j = static_cast<std::size_t>(idx[sd]);
      const double mid = 0.5 * (box.lo[sd] + box.hi[sd]);
      const double half = 0.5 * (box.hi[sd] - box.lo[sd]);
      u[sd] = mid + half * r.x[j];
      wk *= r.wk[j];
      wg *= r.wg[j];
    }
    const double val = f(u);
    qk += wk * val;
    qg += wg * val;
    int d = 0;
    while (d < k && ++idx[static_cast<std::size_t>(d)] == 15) idx[static_cast<std::size_t>(d++)] = 0;
    if (d == k) break;
  }
  box.kronrod = qk * half_volume;
  box.error = std::abs(qk - qg) * half_volume;
}

void check_curved_simplex(const PointList& vertices, const SpaceForm& space) {
  if (!space.curved()) throw UnsupportedError("cone-measure integration needs a curved space");
  if (vertices.size() < 2) throw InputError("cone-measure integration needs at least two vertices");
  for (const auto& p : vertices) {
    if (p.size() != space.ambient_dim()) throw InputError("vertex has the wrong coordinate length");
  }
}

}  // namespace

VolumeResult curved_volume_quadrature(const PointList& vertices, const SpaceForm& space,
                                      const QuadratureConfig& quad) {
  check_curved_simplex(vertices, space);
  const int k = static_cast<int>(vertices.size()) - 1;
  const Integrand f{vertices, space, gram_norm(vertices, space), k};
  if (f.norm == 0.0) throw DegenerateFaceError("curved simplex has zero Gram norm");

  long next_id = 0;
  Box root{std::vector<double>(static_cast<std::size_t>(k), 0.0), std::vector<double>(static_cast<std::size_t>(k), 1.0)};
  root.id = next_id++;
  integrate_box(root, f);

  std::priority_queue<Box, std::vector<Box>, BoxOrder> active;
  std::vector<Box> finished;
  double total = root.kronrod;
  double total_err = root.error;
  active.push(std::move(root));
  int evaluated = 1;

  while (!active.empty() && total_err > std::max(quad.abs_tol, quad.rel_tol * std::abs(total))) {
    Box worst = active.top();
    active.pop();
    if (worst.depth >= quad.max_depth || evaluated + (1 << k) > quad.max_boxes) {
      finished.push_back(std::move(worst));
      continue;
    }
    total -= worst.kronrod;
    total_err -= worst.error;
    for (int mask = 0; mask < (1 << k); ++mask) {
      Box child{worst.lo, worst.hi, worst.depth + 1};
      for (int d = 0; d < k; ++d) {
        const auto sd = static_cast<std::size_t>(d);
        const double mid = 0.5 * (worst.lo[sd] + worst.hi[sd]);
        if (mask & (1 << d)) {
          child.lo[sd] = mid;
        } else {
          child.hi[sd] = mid;
        }
      }
      child.id = next_id++;
      integrate_box(child, f);
      total += child.kronrod;
      total_err += child.error;
      active.push(std::move(child));
      ++evaluated;
    }
  }
  // Re-sum in a fixed order so that the result does not carry the running-sum drift.
  std::vector<Box> all = std::move(finished);
  while (!active.empty()) {
    all.push_back(active.top());
    active.pop();
  }
  std::sort(all.begin(), all.end(), [](const Box& a, const Box& b) { return a.id < b.id; });
  total = 0.0;
  total_err = 0.0;
  for (const auto& b : all) {
    total += b.kronrod;
    total_err += b.error;
  }
  return {total, total_err, VolumeMethod::Quadrature};
}

VolumeResult curved_volume_monte_carlo(const PointList& vertices, const SpaceForm& space, std::size_t samples,
                                       std::uint64_t seed) {
  check_curved_simplex(vertices, space);
  if (samples < 2) throw InputError("Monte Carlo volume needs at least two samples");
  const int k = static_cast<int>(vertices.size()) - 1;
  const double norm = gram_norm(vertices, space);
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  double k_fact = 1.0;
  for (int i = 2; i <= k; ++i) k_fact *= i;

  double mean = 0.0;
  double m2 = 0.0;
  std::vector<double> lam(vertices.size());
  for (std::size_t s = 0; s < samples; ++s) {
    double sum = 0.0;
    for (auto& l : lam) sum += (l = expo(rng));
    Point x = Point::Zero(vertices.front().size());
    for (std::size_t i = 0; i < vertices.size(); ++i) x += (lam[i] / sum) * vertices[i];
    const double q = space.curvature() * metric_dot(x, x, space);
    const double val = norm / std::pow(q, 0.5 * (k + 1)) / k_fact;
    const double delta = val - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (val - mean);
  }
  const double var = m2 / static_cast<double>(samples - 1);
  return {mean, std::sqrt(var / static_cast<double>(samples)), VolumeMethod::MonteCarlo};
}

}  // namespace simplexlift
