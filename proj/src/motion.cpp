#include "simplexlift/motion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numeric>

#include "simplexlift/dual.hpp"
#include "simplexlift/errors.hpp"
#include "simplexlift/invariants.hpp"
#include "simplexlift/linalg.hpp"
#include "simplexlift/sampling.hpp"

namespace simplexlift {

namespace {

constexpr double kUnbounded = std::numeric_limits<double>::infinity();

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Pulls a perturbed point back onto the quadric (no-op in flat space).
Point onto_space(const Point& x, const SpaceForm& space) {
  return space.curved() ? to_space(x, space, kUnbounded) : x;
}

PointList append_zero(const PointList& pts) {
  PointList out;
  for (const auto& p : pts) {
    Point q = Point::Zero(p.size() + 1);
    q.head(p.size()) = p;
    out.push_back(q);
  }
  return out;
}

/// Outward normal of facet i scaled to n! V_n(F_i), for n+2 points in R^{n+1}.
Point outward_cofactor_normal(const PointList& simplex, int i) {
  const int count = static_cast<int>(simplex.size());
  const PointList f = face_points(facet_omitting(count, i), simplex);
  Eigen::MatrixXd rows(count - 2, simplex.front().size());
  for (int k = 1; k < count - 1; ++k) rows.row(k - 1) = (f[idx(k)] - f[0]).transpose();
  Point normal = cofactor_normal(rows);
  if (normal.dot(simplex[idx(i)] - f[0]) > 0.0) normal = -normal;
  return normal;
}

void check_flat_simplex(const PointList& simplex) {
  if (simplex.size() < 2) throw InputError("need at least two points");
  const Eigen::Index dim = static_cast<Eigen::Index>(simplex.size()) - 1;
  for (const auto& p : simplex) {
    if (p.size() != dim) throw InputError("expected n+2 points in R^{n+1}");
  }
}

}  // namespace

ConstraintValue constraint_value(const PointList& vertices, const RadonPartition& partition, const SpaceForm& space,
                                 const QuadratureConfig& quad) {
  const PartitionSums sums = partition_sums(vertices, partition, space, quad);
  ConstraintValue out;
  out.s = sums.sum1 - sums.sum2 - partition.target;
  out.error_estimate = sums.error_estimate;
  for (const auto& v : sums.facets) out.volumes.push_back(v.value);
  return out;
}

double reflection_gap_squared(const PointList& vertices, const SpaceForm& space) {
  if (vertices.size() < 3) throw InputError("reflection gap needs at least three vertices");
  const PointList rest(vertices.begin() + 1, vertices.end());
  const Point mirror = reflect_through_span(vertices[0], rest, space);
  const Point diff = mirror - vertices[0];
  return std::max(0.0, metric_dot(diff, diff, space));
}

LiftGeometry::LiftGeometry(const PointList& vertices, const SpaceForm& space) : space_(space) {
  const int n = static_cast<int>(vertices.size()) - 2;
  if (n < 1) throw InputError("lift needs at least three vertices");
  for (const auto& p : vertices) {
    if (p.size() != space.ambient_dim()) throw InputError("vertex has the wrong coordinate length");
  }
  if (space.dim() == n) {
    space_ = space.with_dim(n + 1);
    base_ = append_zero(vertices);
    Point e = Point::Zero(space_.ambient_dim());
    e(e.size() - 1) = 1.0;
    normals_.push_back(e);
    return;
  }
  base_ = vertices;
  Eigen::MatrixXd constraints;
  if (!space.curved()) {
    const AffineFrame frame = affine_frame(vertices);
    if (frame.dim() != n) throw NotDegenerateError("configuration is not degenerate: it spans more than n dimensions");
    constraints = frame.basis.transpose();
  } else {
    constraints.resize(static_cast<Eigen::Index>(vertices.size()), space.ambient_dim());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      Point jv = vertices[i];
      if (space.curvature() < 0) jv(0) = -jv(0);
      constraints.row(static_cast<Eigen::Index>(i)) = jv.transpose();
    }
  }
  const Eigen::MatrixXd complement = null_space(constraints);
  for (Eigen::Index j = 0; j < complement.cols(); ++j) {
    Point v = complement.col(j);
    for (const auto& prev : normals_) v -= metric_dot(prev, v, space_) * prev;
    const double len2 = metric_dot(v, v, space_);
    if (len2 <= 1e-20) continue;
    normals_.push_back(v / std::sqrt(len2));
  }
  if (normals_.empty()) throw NotDegenerateError("configuration is not degenerate");
}

PointList LiftGeometry::lift(const std::vector<Eigen::VectorXd>& offsets, double h) const {
  if (offsets.size() != base_.size()) throw InputError("one offset per vertex expected");
  PointList out;
  out.reserve(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) {
    Point x = base_[i];
    for (Eigen::Index j = 0; j < offsets[i].size() && j < normal_count(); ++j) x += h * offsets[i](j) * normals_[idx(static_cast<int>(j))];
    out.push_back(onto_space(x, space_));
  }
  return out;
}

const char* to_string(PathKind kind) {
  switch (kind) {
    case PathKind::Rectangle: return "rectangle";
    case PathKind::Trapezoid: return "trapezoid";
    case PathKind::GenericLift: return "generic-lift";
    case PathKind::Waypoints: return "waypoints";
  }
  return "unknown";
}

const char* to_string(Smoothness s) { return s == Smoothness::Smooth ? "smooth" : "continuous"; }

MotionPath rectangle_path(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw InputError("rectangle half-sides must be positive");
  MotionPath path;
  path.kind = PathKind::Rectangle;
  path.parameters = {{"a", a}, {"b", b}};
  path.space = SpaceForm::euclidean(3);
  path.evaluate = [a, b](double t) {
    return PointList{Point{{a, b, 0.0}}, Point{{-a, b, t}}, Point{{-a, -b, 0.0}}, Point{{a, -b, t}}};
  };
  return path;
}

TrapezoidShape trapezoid_shape(double l, double d, double p) {
  if (!(l > 0.0) || !(d > 0.0) || !(p > 0.0)) throw InputError("trapezoid lengths must be positive");
  TrapezoidShape s;
  s.p = p;
  s.q = (d * d - l * l) / (4.0 * p);
  if (!(s.q > 0.0)) throw InputError("trapezoid infeasible: the diagonal must exceed the leg");
  const double h2 = l * l - (p - s.q) * (p - s.q);
  if (!(h2 > 0.0)) throw InputError("trapezoid infeasible: the leg is too short for the bases");
  s.height = std::sqrt(h2);
  return s;
}

PointList trapezoid_family(double l, double d, double p, double t) {
  const TrapezoidShape s = trapezoid_shape(l, d, p);
  const double y = 0.5 * s.height;
  return {Point{{s.q, y, 0.0}}, Point{{-s.q, y, t}}, Point{{-s.p, -y, 0.0}}, Point{{s.p, -y, t}}};
}

MotionPath trapezoid_path(double l, double d, double p) {
  trapezoid_shape(l, d, p);
  MotionPath path;
  path.kind = PathKind::Trapezoid;
  path.parameters = {{"l", l}, {"d", d}, {"p", p}};
  path.space = SpaceForm::euclidean(3);
  path.evaluate = [l, d, p](double t) { return trapezoid_family(l, d, p, t); };
  return path;
}

MotionPath generic_lift_path(const PointList& vertices, const SpaceForm& space, const Eigen::VectorXd& heights) {
  if (static_cast<std::size_t>(heights.size()) != vertices.size()) throw InputError("one height per vertex expected");
  auto geom = std::make_shared<LiftGeometry>(vertices, space);
  std::vector<Eigen::VectorXd> offsets;
  for (Eigen::Index i = 0; i < heights.size(); ++i) offsets.push_back(Eigen::VectorXd::Constant(1, heights(i)));
  MotionPath path;
  path.kind = PathKind::GenericLift;
  path.space = geom->space();
  for (Eigen::Index i = 0; i < heights.size(); ++i) path.parameters["h" + std::to_string(i + 1)] = heights(i);
  path.evaluate = [geom, offsets](double t) { return geom->lift(offsets, t); };
  return path;
}

MotionPath waypoint_path(const std::vector<PointList>& waypoints, const SpaceForm& space) {
  if (waypoints.size() < 2) throw InputError("need at least two waypoints");
  for (const auto& w : waypoints) {
    if (w.size() != waypoints.front().size()) throw InputError("waypoints differ in vertex count");
    for (const auto& p : w) {
      if (p.size() != space.ambient_dim()) throw InputError("waypoint vertex has the wrong coordinate length");
    }
  }
  MotionPath path;
  path.kind = PathKind::Waypoints;
  path.space = space;
  path.t_max = static_cast<double>(waypoints.size() - 1);
  path.smoothness = Smoothness::Continuous;
  path.parameters["waypoints"] = static_cast<double>(waypoints.size());
  path.evaluate = [waypoints, space](double t) {
    const double clamped = std::clamp(t, 0.0, static_cast<double>(waypoints.size() - 1));
    const std::size_t seg = std::min(static_cast<std::size_t>(clamped), waypoints.size() - 2);
    const double f = clamped - static_cast<double>(seg);
    PointList out;
    for (std::size_t i = 0; i < waypoints[seg].size(); ++i) {
      out.push_back(onto_space((1.0 - f) * waypoints[seg][i] + f * waypoints[seg + 1][i], space));
    }
    return out;
  };
  return path;
}

MotionTrace trace_path(const MotionPath& path, const std::vector<double>& ts, const QuadratureConfig& quad) {
  MotionTrace trace;
  const PointList start = path.evaluate(path.t_min);
  trace.partition = radon_partition(solve_one_stress(start, path.space), path.space);
  for (double t : ts) {
    TraceSample sample;
    sample.t = t;
    const PointList a = path.evaluate(t);
    try {
      const ConstraintValue cv = constraint_value(a, trace.partition, path.space, quad);
      sample.s = cv.s;
      sample.volumes = cv.volumes;
      sample.gap_squared = reflection_gap_squared(a, path.space);
    } catch (const DegenerateFaceError& e) {
      sample.s = std::numeric_limits<double>::quiet_NaN();
      sample.gap_squared = std::numeric_limits<double>::quiet_NaN();
      sample.diagnostic = e.what();
    }
    trace.samples.push_back(std::move(sample));
  }
  return trace;
}

MotionStressFrame motion_stress_frame(const PointList& vertices, const SpaceForm& space, double t) {
  const int count = static_cast<int>(vertices.size());
  if (count < 3) throw InputError("stress frame needs at least three vertices");
  MotionStressFrame frame;
  frame.t = t;
  frame.alpha.resize(count);
  frame.theta.resize(count);
  frame.alpha(0) = face_norm(face_points(facet_omitting(count, 0), vertices), space);
  frame.theta(0) = 0.0;
  for (int i = 1; i < count; ++i) {
    PointList ridge;
    for (int j = 1; j < count; ++j) {
      if (j != i) ridge.push_back(vertices[idx(j)]);
    }
    // Inward normals of F_1 and F_i at their common ridge.
    const Point u1 = inward_unit_normal(ridge, vertices[idx(i)], space);
    const Point ui = inward_unit_normal(ridge, vertices[0], space);
    const double cosine = metric_dot(u1, ui, space);
    const Point perp = u1 - cosine * ui;
    frame.theta(i) = std::atan2(std::sqrt(std::max(0.0, metric_dot(perp, perp, space))), cosine);
    frame.alpha(i) = -face_norm(face_points(facet_omitting(count, i), vertices), space) * cosine;
  }
  return frame;
}

std::vector<double> default_height_grid() {
  std::vector<double> hs;
  for (int j = 0; j <= 7; ++j) hs.push_back(1e-2 * std::ldexp(1.0, -j));
  return hs;
}

LiftReport lift_experiment(const PointList& vertices, const SpaceForm& space, const LiftConfig& cfg,
                           const QuadratureConfig& quad) {
  constexpr double kZeroDeltaS = 1e-13;
  const int count = static_cast<int>(vertices.size());
  const int n = count - 2;
  const LiftGeometry geom(vertices, space);
  const SpaceForm& lifted = geom.space();
  const OneStress alpha = solve_one_stress(geom.base(), lifted);

  LiftReport report;
  report.partition = radon_partition(alpha, lifted);
  const InvariantSequence inv = invariant_sequence(geom.base(), alpha, lifted, std::nullopt, std::nullopt, quad);
  report.c_nm1 = inv.c[idx(n - 1)];
  const double norm1 = face_norm(face_points(facet_omitting(count, 0), geom.base()), lifted);
  report.predicted_rho = -alpha[0] * alpha[0] * report.c_nm1 * (std::abs(alpha[0]) / norm1) /
                         (8.0 * factorial(n) * alpha.alpha.prod());
  const double s0 = constraint_value(geom.base(), report.partition, lifted, quad).s;

  const int m = geom.normal_count();
  struct Perturbation {
    std::string label;
    std::vector<Eigen::VectorXd> offsets;
  };
  std::vector<Perturbation> perturbations;
  std::uint64_t stream = 0;
  auto zero_offsets = [&] { return std::vector<Eigen::VectorXd>(idx(count), Eigen::VectorXd::Zero(m)); };
  if (cfg.single_vertex_lifts) {
    for (int i = 0; i < count; ++i) {
      Rng rng = make_rng(cfg.seed, stream++);
      Perturbation p{"vertex " + std::to_string(i + 1), zero_offsets()};
      p.offsets[idx(i)] = random_unit_vector(m, rng);
      perturbations.push_back(std::move(p));
    }
  }
  if (cfg.class_lifts) {
    for (int cls = 0; cls < 2; ++cls) {
      Perturbation p{cls == 0 ? "class X1" : "class X2", zero_offsets()};
      for (int i : cls == 0 ? report.partition.x1 : report.partition.x2) p.offsets[idx(i)](0) = 1.0;
      perturbations.push_back(std::move(p));
    }
  }
  for (int r = 0; r < cfg.random_lifts; ++r) {
    Rng rng = make_rng(cfg.seed, 1000 + static_cast<std::uint64_t>(r));
    const Eigen::VectorXd joint = random_unit_vector(m * count, rng);
    Perturbation p{"random " + std::to_string(r + 1), zero_offsets()};
    for (int i = 0; i < count; ++i) p.offsets[idx(i)] = joint.segment(static_cast<Eigen::Index>(i) * m, m);
    perturbations.push_back(std::move(p));
  }

  int sign = 0;
  bool consistent = true;
  report.min_abs_delta_s = kUnbounded;
  for (const auto& pert : perturbations) {
    LiftRun run;
    run.label = pert.label;
    double max_abs = 0.0;
    try {
      for (double h : cfg.heights) {
        const PointList a = geom.lift(pert.offsets, h);
        LiftSample s;
        s.h = h;
        s.delta_s = constraint_value(a, report.partition, lifted, quad).s - s0;
        s.gap_squared = reflection_gap_squared(a, lifted);
        s.rho = s.gap_squared > 0.0 ? s.delta_s / s.gap_squared : std::numeric_limits<double>::quiet_NaN();
        max_abs = std::max(max_abs, std::abs(s.delta_s));
        run.samples.push_back(s);
      }
    } catch (const DegenerateFaceError& e) {
      run.excluded = true;
      run.diagnostic = e.what();
    }
    if (!run.excluded && std::all_of(run.samples.begin(), run.samples.end(),
                                     [](const LiftSample& s) { return !(s.gap_squared > 1e-24); })) {
      run.excluded = true;
      run.diagnostic = "perturbation stays in M^n";
    }
    if (!run.excluded) {
      for (std::size_t j = 0; j + 1 < run.samples.size(); ++j) {
        const LiftSample& big = run.samples[j];
        const LiftSample& small = run.samples[j + 1];
        if (big.h > 1e-3 * (1.0 + 1e-12) || std::abs(small.h - 0.5 * big.h) > 1e-12 * big.h) continue;
        run.richardson_deviation = std::max(run.richardson_deviation, std::abs(big.rho - small.rho) / std::abs(small.rho));
      }
      if (run.samples.size() >= 2) {
        const LiftSample& last = run.samples.back();
        const LiftSample& prev = run.samples[run.samples.size() - 2];
        run.rho_limit = 2.0 * last.rho - prev.rho;
      }
      for (const auto& s : run.samples) {
        const int sg = std::abs(s.delta_s) > kZeroDeltaS ? (s.delta_s > 0.0 ? 1 : -1) : 0;
        if (sg == 0 || (sign != 0 && sg != sign)) consistent = false;
        if (sign == 0) sign = sg;
      }
      report.max_richardson_deviation = std::max(report.max_richardson_deviation, run.richardson_deviation);
      if (max_abs < report.min_abs_delta_s) {
        report.min_abs_delta_s = max_abs;
        report.min_abs_delta_s_label = run.label;
      }
    }
    report.runs.push_back(std::move(run));
  }
  report.sign_constant = consistent && sign != 0;
  report.sign = report.sign_constant ? sign : 0;
  return report;
}

std::vector<double> default_lemma_grid() { return {2e-2, 1e-2, 5e-3, 2e-3, 1e-3}; }

LemmaRatioReport lemma_ratio_check(const MotionPath& path, const std::vector<double>& ts,
                                   const QuadratureConfig& quad) {
  const SpaceForm& space = path.space;
  const PointList a0 = path.evaluate(path.t_min);
  const int count = static_cast<int>(a0.size());
  const int n = count - 2;
  if (space.curved() && n > 2) throw UnsupportedError("lemma ratio check supports n <= 2 in curved spaces");

  LemmaRatioReport report;
  report.alpha0 = motion_stress_frame(a0, space).alpha;
  report.c_nm1 = invariant_sequence(a0, OneStress{report.alpha0}, space, std::nullopt, std::nullopt, quad).c[idx(n - 1)];

  std::vector<double> grid = ts;
  std::sort(grid.begin(), grid.end(), std::greater<>());
  std::vector<double> gaps, dgaps;
  for (double t : grid) {
    const double delta = 1e-3 * t;
    gaps.push_back(reflection_gap_squared(path.evaluate(t), space));
    dgaps.push_back((reflection_gap_squared(path.evaluate(t + delta), space) -
                     reflection_gap_squared(path.evaluate(t - delta), space)) /
                    (2.0 * delta));
  }
  if (*std::max_element(gaps.begin(), gaps.end()) < 1e-16) {
    report.indeterminate = true;
    for (double t : grid) report.samples.push_back({t, 0.0, 0.0, std::numeric_limits<double>::quiet_NaN()});
    return report;
  }
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    if (!(gaps[j] > gaps[j + 1]) || !(dgaps[j] > dgaps[j + 1])) {
      throw AssumptionViolation("|A0A1|^2 and its derivative must increase along the path near t = 0");
    }
  }

  const double nf = factorial(n);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double t = grid[j];
    const double delta = 1e-3 * t;
    const PointList a = path.evaluate(t);
    const PointList ap = path.evaluate(t + delta);
    const PointList am = path.evaluate(t - delta);
    const Eigen::VectorXd alpha = motion_stress_frame(a, space, t).alpha;
    double lhs = 0.0;
    for (int i = 0; i < count; ++i) {
      const Face f = facet_omitting(count, i);
      double prod = 1.0;
      for (int s = 0; s < count; ++s) {
        if (s != i) prod *= alpha(s);
      }
      const double dv = (simplex_volume(face_points(f, ap), space, quad).value -
                         simplex_volume(face_points(f, am), space, quad).value) /
                        (2.0 * delta);
      lhs += prod * face_norm(face_points(f, a), space) * dv;
    }
    lhs *= 2.0 * nf;
    const double rhs = -0.25 * report.alpha0(0) * report.alpha0(0) * report.c_nm1 * dgaps[j];
    report.samples.push_back({t, lhs, rhs, lhs / rhs});
  }
  return report;
}

MotionPath spherical_interior_lift_path() {
  auto unit = [](Point v) { return Point(v / v.norm()); };
  const PointList base{unit(Point{{1.0, 0.1, 0.2, 0.0}}), unit(Point{{0.1, 1.0, 0.2, 0.0}}),
                       unit(Point{{0.2, 0.1, 1.0, 0.0}})};
  const Point inner = unit(base[0] + base[1] + base[2] + Point{{0.05, -0.03, 0.0, 0.0}});
  MotionPath path;
  path.kind = PathKind::GenericLift;
  path.space = SpaceForm::spherical(3);
  path.evaluate = [base, inner](double t) {
    PointList out = base;
    const Point lifted = inner + Point{{0.0, 0.0, 0.0, t}};
    out.push_back(lifted / lifted.norm());
    return out;
  };
  return path;
}

SphericalSumStats spherical_sum_sample(int n, int d, int count, std::uint64_t seed) {
  if (n < 1 || n > 3) throw UnsupportedError("spherical sums need 1 <= n <= 3");
  if (d < n + 1) throw InputError("spherical sums need d >= n + 1");
  if (count < 1) throw InputError("sample count must be positive");
  const SpaceForm space = SpaceForm::spherical(d);
  const double full = unit_sphere_volume(n);
  SphericalSumStats stats;
  stats.n = n;
  stats.d = d;
  stats.count = count;
  stats.max_gap = -kUnbounded;
  stats.min_gap = kUnbounded;
  double total = 0.0;
  for (int s = 0; s < count; ++s) {
    Rng rng = make_rng(seed, static_cast<std::uint64_t>(s));
    while (true) {
      PointList pts;
      for (int i = 0; i < n + 2; ++i) pts.push_back(random_unit_vector(d + 1, rng));
      bool ok = linear_shape_ratio(pts) >= 1e-3;
      double sum = 0.0;
      for (int i = 0; ok && i < n + 2; ++i) {
        const PointList f = face_points(facet_omitting(n + 2, i), pts);
        ok = linear_shape_ratio(f) >= 1e-3;
        if (ok) sum += simplex_volume(f, space).value;
      }
      if (!ok) {
        ++stats.resampled;
        continue;
      }
      const double gap = sum - full;
      stats.max_gap = std::max(stats.max_gap, gap);
      stats.min_gap = std::min(stats.min_gap, gap);
      total += gap;
      break;
    }
  }
  stats.mean_gap = total / count;
  stats.all_below = stats.max_gap < 0.0;
  return stats;
}

std::vector<std::pair<double, double>> near_case_zero_probe(int n, std::uint64_t seed,
                                                            const std::vector<double>& heights) {
  Rng rng = make_rng(seed, 7);
  const DegenerateSample sample = random_degenerate(SpaceForm::spherical(n), n, rng, CaseFilter::CaseZero);
  const LiftGeometry geom(sample.vertices, SpaceForm::spherical(n));
  const Eigen::VectorXd joint = random_unit_vector(n + 2, rng);
  std::vector<Eigen::VectorXd> offsets;
  for (int i = 0; i < n + 2; ++i) offsets.push_back(Eigen::VectorXd::Constant(1, joint(i)));
  std::vector<std::pair<double, double>> out;
  for (double h : heights) {
    const PointList a = geom.lift(offsets, h);
    double sum = 0.0;
    for (int i = 0; i < n + 2; ++i) sum += simplex_volume(face_points(facet_omitting(n + 2, i), a), geom.space()).value;
    out.emplace_back(h, sum);
  }
  return out;
}

MinkowskiResult minkowski_residual(const PointList& simplex, const std::optional<RadonPartition>& partition) {
  check_flat_simplex(simplex);
  const int count = static_cast<int>(simplex.size());
  const int n = count - 2;
  if (flat_shape_ratio(simplex) < 1e-12) throw DegenerateFaceError("simplex is degenerate");
  const double nf = factorial(n);
  std::vector<double> sign(idx(count), 1.0);
  if (partition) {
    for (int i : partition->x2) sign[idx(i)] = -1.0;
  }
  Point plain = Point::Zero(n + 1);
  Point signed_sum = Point::Zero(n + 1);
  for (int i = 0; i < count; ++i) {
    const Point weighted = outward_cofactor_normal(simplex, i) / nf;  // V_n(F_i) u_i
    plain += weighted;
    // B_i = sign_i u_i enters with weight sign_i V_n(F_i).
    signed_sum += sign[idx(i)] * (sign[idx(i)] * weighted);
  }
  return {plain.norm(), signed_sum.norm()};
}

GaussMapReport gauss_map_limit(const MotionPath& path, const std::vector<double>& ts) {
  if (path.space.curved()) throw UnsupportedError("the Gauss map limit is defined for flat paths");
  const PointList a0 = path.evaluate(path.t_min);
  check_flat_simplex(a0);
  const int count = static_cast<int>(a0.size());
  const OneStress alpha = solve_one_stress(a0, path.space);
  const DualConfiguration dual = construct_dual(a0);
  const Eigen::MatrixXd complement = null_space(dual.frame.transpose());
  if (complement.cols() != 1) throw InternalConsistencyError("expected a hyperplane configuration");
  const Point up = complement.col(0);

  GaussMapReport report;
  for (double t : ts) {
    const PointList a = path.evaluate(t);
    PointList b;
    double side = 0.0;
    for (int i = 0; i < count; ++i) {
      Point u = outward_cofactor_normal(a, i);
      u /= u.norm();
      if (alpha[i] < 0.0) u = -u;
      side += u.dot(up);
      b.push_back(u);
    }
    PointList projected;
    for (const auto& u : b) projected.push_back(dual.frame.transpose() * (side < 0.0 ? Point(-u) : u));
    report.t.push_back(t);
    report.residual.push_back(similarity_residual(projected, dual.b));
  }
  report.monotone = true;
  for (std::size_t j = 0; j + 1 < report.residual.size(); ++j) {
    if (!(report.residual[j + 1] < report.residual[j])) report.monotone = false;
  }
  report.final_residual = report.residual.empty() ? 0.0 : report.residual.back();
  return report;
}

}  // namespace simplexlift
