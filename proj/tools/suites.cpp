#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "simplexlift/dual.hpp"
#include "simplexlift/errors.hpp"
#include "simplexlift/invariants.hpp"
#include "simplexlift/linalg.hpp"
#include "simplexlift/motion.hpp"
#include "simplexlift/sampling.hpp"

namespace simplexlift::cli {

namespace {

constexpr double kPi = std::numbers::pi;

void add(CriterionResult& r, std::string name, double value, const std::string& relation, double bound) {
  bool ok = false;
  if (relation == "<") ok = value < bound;
  else if (relation == "<=") ok = value <= bound;
  else if (relation == ">") ok = value > bound;
  else if (relation == ">=") ok = value >= bound;
  else if (relation == "==") ok = value == bound;
  r.metrics.push_back({std::move(name), value, relation, bound, ok});
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::uint64_t stream_id(int criterion, int sub) { return static_cast<std::uint64_t>(criterion) * 10000 + static_cast<std::uint64_t>(sub); }

PointList pts2(std::initializer_list<std::pair<double, double>> xy) {
  PointList out;
  for (auto [x, y] : xy) out.push_back(Point{{x, y}});
  return out;
}

PointList triangle_centroid() { return pts2({{0, 0}, {1, 0}, {0, 1}, {1.0 / 3, 1.0 / 3}}); }
PointList unit_square() { return pts2({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

const char* space_name(int kappa) { return kappa == 0 ? "euclidean" : (kappa > 0 ? "spherical" : "hyperbolic"); }

// 1: sum_{X1} V - sum_{X2} V = target on random degenerate configurations.
void partition_identity(std::uint64_t seed, CriterionResult& r) {
  const std::pair<int, int> combos[] = {{0, 2}, {0, 3}, {1, 1}, {1, 2}, {-1, 1}, {-1, 2}};
  int sub = 0;
  for (auto [kappa, n] : combos) {
    const SpaceForm space(kappa, n + 1);
    Rng rng = make_rng(seed, stream_id(1, sub++));
    double worst = 0.0;
    bool approximate = false;
    int cases[3] = {0, 0, 0};
    for (int i = 0; i < 200; ++i) {
      const DegenerateSample sample = random_degenerate(space, n, rng);
      const OneStress alpha = solve_one_stress(sample.vertices, space);
      const RadonPartition part = radon_partition(alpha, space);
      const PartitionSums sums = partition_sums(sample.vertices, part, space);
      approximate = approximate || sums.error_estimate > 0.0;
      ++cases[part.case_id];
      worst = std::max(worst, std::abs(sums.sum1 - sums.sum2 - part.target));
    }
    add(r, std::string(space_name(kappa)) + " n=" + std::to_string(n) + " max |S|", worst, "<", approximate ? 1e-5 : 1e-8);
    r.notes.push_back(std::string(space_name(kappa)) + " n=" + std::to_string(n) + ": cases 0/1/2 = " +
                      std::to_string(cases[0]) + "/" + std::to_string(cases[1]) + "/" + std::to_string(cases[2]));
  }
}

// 2: case-0 configurations fill the sphere exactly.
void case_zero(std::uint64_t seed, CriterionResult& r) {
  const SpaceForm s1 = SpaceForm::spherical(1);
  PointList thirds;
  for (int i = 0; i < 3; ++i) thirds.push_back(Point{{std::cos(2 * kPi * i / 3), std::sin(2 * kPi * i / 3)}});
  const OneStress a1 = solve_one_stress(thirds, s1);
  const RadonPartition p1 = radon_partition(a1, s1);
  const PartitionSums sums1 = partition_sums(thirds, p1, s1);
  add(r, "S^1 thirds: case", p1.case_id, "==", 0);
  add(r, "S^1 thirds: |sum - 2pi|", std::abs(sums1.sum1 + sums1.sum2 - 2 * kPi), "<", 1e-12);

  const SpaceForm s2 = SpaceForm::spherical(2);
  Rng rng = make_rng(seed, stream_id(2, 0));
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const DegenerateSample sample = random_degenerate(s2, 2, rng, CaseFilter::CaseZero);
    double sum = 0.0;
    for (int f = 0; f < 4; ++f) sum += simplex_volume(face_points(facet_omitting(4, f), sample.vertices), s2).value;
    worst = std::max(worst, std::abs(sum - 4 * kPi));
  }
  add(r, "S^2 case 0 (50 samples): max |sum - 4pi|", worst, "<", 1e-6);
}

// 3: facet volumes of a spherical simplex sum to less than the sphere.
void spherical_sum(std::uint64_t seed, CriterionResult& r) {
  for (int n = 1; n <= 2; ++n) {
    const SphericalSumStats st = spherical_sum_sample(n, n + 1, 1000, seed + static_cast<std::uint64_t>(n));
    add(r, "n=" + std::to_string(n) + " (1000 simplices): max sum - V(S^n)", st.max_gap, "<", 0.0);
    r.notes.push_back("n=" + std::to_string(n) + ": mean gap " + fmt("%.6g", st.mean_gap) + ", resampled " +
                      std::to_string(st.resampled));
  }
  const auto probe = near_case_zero_probe(2, seed, {1e-1, 1e-2, 1e-3});
  for (const auto& [h, sum] : probe) {
    r.notes.push_back("near case 0, lift height " + fmt("%g", h) + ": sum - 4pi = " + fmt("%.6g", sum - 4 * kPi));
  }
}

// 4: c_k does not depend on the probe points.
void invariance(std::uint64_t seed, CriterionResult& r) {
  for (int n = 2; n <= 4; ++n) {
    const SpaceForm space = SpaceForm::euclidean(n);
    Rng rng = make_rng(seed, stream_id(4, n));
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const DegenerateSample sample = random_degenerate(space, n, rng);
      const OneStress alpha = solve_one_stress(sample.vertices, space);
      const InvariantSequence base = invariant_sequence(sample.vertices, alpha, space);
      double scale = 0.0;
      for (double c : base.c) scale = std::max(scale, std::abs(c));
      for (int k = 0; k < 20; ++k) {
        const Point p = random_gaussian(n, rng);
        const Point q = random_gaussian(n, rng);
        const InvariantSequence other = invariant_sequence(sample.vertices, alpha, space, p, q);
        for (std::size_t j = 0; j < base.c.size(); ++j) worst = std::max(worst, std::abs(other.c[j] - base.c[j]) / scale);
      }
    }
    add(r, "n=" + std::to_string(n) + " (50 configurations x 20 probe pairs): max relative deviation", worst, "<", 1e-8);
  }
}

// 5: one zero root, the rest real.
void root_structure(std::uint64_t seed, CriterionResult& r) {
  for (int n = 2; n <= 4; ++n) {
    const SpaceForm space = SpaceForm::euclidean(n);
    Rng rng = make_rng(seed, stream_id(5, n));
    int bad_zero = 0;
    double worst_imag = 0.0;
    for (int i = 0; i < 100; ++i) {
      const DegenerateSample sample = random_degenerate(space, n, rng);
      const OneStress alpha = solve_one_stress(sample.vertices, space);
      const CharPoly cp = characteristic_polynomial(invariant_sequence(sample.vertices, alpha, space));
      if (cp.zero_roots != 1) ++bad_zero;
      worst_imag = std::max(worst_imag, cp.max_imag_ratio);
    }
    add(r, "n=" + std::to_string(n) + ": configurations without exactly one zero root", bad_zero, "==", 0);
    add(r, "n=" + std::to_string(n) + ": max |Im| / |root|", worst_imag, "<", 1e-7);
  }
}

// 6: three evaluations of c_1 in curved space agree.
void curved_c1(std::uint64_t seed, CriterionResult& r) {
  for (int kappa : {1, -1}) {
    Rng rng = make_rng(seed, stream_id(6, kappa + 1));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const int n = 1 + i % 2;
      const SpaceForm space(kappa, n + 1);
      const DegenerateSample sample = random_degenerate(space, n, rng);
      const OneStress alpha = solve_one_stress(sample.vertices, space);
      Point p, q;
      do {
        p = random_space_point(space, rng);
        q = random_space_point(space, rng);
      } while (std::abs(1.0 + kappa * metric_dot(p, q, space)) < 0.1);
      const InvariantSequence inv = invariant_sequence(sample.vertices, alpha, space, p, q);
      const double closed = 2.0 * kappa * alpha.alpha.sum();
      const double g = inv.c1_g_route.value();
      const double scale = std::max({1.0, std::abs(closed), std::abs(g)});
      worst = std::max({worst, std::abs(inv.c[1] - closed) / scale, std::abs(inv.c[1] - g) / scale,
                        std::abs(closed - g) / scale});
    }
    add(r, std::string(space_name(kappa)) + " (100 configurations): max c_1 route disagreement", worst, "<", 1e-8);
  }
}

// 7: the dual and its relations.
void duality(std::uint64_t seed, CriterionResult& r) {
  for (int n = 2; n <= 4; ++n) {
    const SpaceForm space = SpaceForm::euclidean(n);
    Rng rng = make_rng(seed, stream_id(7, n));
    double orth = 0.0, spread = 0.0, beta_dev = 0.0, ident = 0.0, recip = 0.0;
    for (int i = 0; i < 100; ++i) {
      const DegenerateSample sample = random_degenerate(space, n, rng);
      const DualConfiguration dual = construct_dual(sample.vertices);
      const OneStress alpha = solve_one_stress(dual.a, space);
      const RBetaReport rb = compute_r_and_beta(dual.a, dual.b, alpha);
      const MatrixIdentityReport mi = matrix_identities(dual.a, dual.b, alpha, rb.beta, rb.r);
      const CharPoly f = characteristic_polynomial(invariant_sequence(dual.a, alpha, space));
      const CharPoly g = characteristic_polynomial(invariant_sequence(dual.b, rb.beta, space));
      const ReciprocityReport rr = root_reciprocity(f, g);
      orth = std::max(orth, duality_residual(dual.a, dual.b));
      spread = std::max(spread, rb.r_spread);
      beta_dev = std::max(beta_dev, rb.beta_alpha_deviation);
      ident = std::max(ident, mi.identity_residual);
      recip = std::max(recip, rr.residual);
    }
    const std::string tag = "n=" + std::to_string(n) + ": ";
    add(r, tag + "orthogonality residual", orth, "<", 1e-9);
    add(r, tag + "r_i spread", spread, "<", 1e-9);
    add(r, tag + "|beta - alpha|", beta_dev, "<", 1e-9);
    add(r, tag + "identity-multiple residual", ident, "<", 1e-8);
    add(r, tag + "root reciprocity residual", recip, "<", 1e-6);
  }
  const DualConfiguration sq = construct_dual(pts2({{1, 0}, {1, 1}, {0, 1}, {0, 0}}));
  const PointList expected = pts2({{0, 1}, {1, 1}, {1, 0}, {0, 0}});
  double dev = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) dev = std::max(dev, (sq.b[i] - expected[i]).cwiseAbs().maxCoeff());
  add(r, "square: |B - expected|", dev, "<", 1e-9);
  add(r, "square: similarity residual to A", similarity_residual(sq.b, sq.a), "<", 1e-9);
  const DualConfiguration ortho = construct_dual(pts2({{0, 0}, {4, 0}, {1, 3}, {1, 1}}));
  add(r, "orthocenter: similarity residual to A", similarity_residual(ortho.b, ortho.a), "<", 1e-9);
}

// 8: c_{n-1} vanishes where the dual becomes cospherical.
void crossing(std::uint64_t seed, CriterionResult& r) {
  for (int n = 2; n <= 3; ++n) {
    const CrossingScan scan = cospherical_crossing_scan(n, seed + static_cast<std::uint64_t>(n));
    const std::string tag = "n=" + std::to_string(n) + ": ";
    add(r, tag + "both crossings found", scan.c_crossing && scan.sphere_crossing ? 1.0 : 0.0, "==", 1.0);
    const double gap = scan.c_crossing && scan.sphere_crossing ? std::abs(*scan.c_crossing - *scan.sphere_crossing)
                                                               : std::numeric_limits<double>::infinity();
    add(r, tag + "crossing separation / grid step", gap / scan.grid_step, "<=", 1.0);
  }
}

// 9: lifting changes S with a fixed sign unless c_{n-1} = 0.
void lifting(std::uint64_t seed, CriterionResult& r) {
  LiftConfig cfg;
  cfg.seed = seed;
  const SpaceForm plane = SpaceForm::euclidean(2);
  const LiftReport tc = lift_experiment(triangle_centroid(), plane, cfg);
  int random_runs = 0;
  double worst_limit = 0.0;
  for (const auto& run : tc.runs) {
    if (run.excluded || run.label.rfind("random", 0) != 0) continue;
    ++random_runs;
    worst_limit = std::max(worst_limit, std::abs(run.rho_limit - tc.predicted_rho) / std::abs(tc.predicted_rho));
  }
  add(r, "triangle+centroid: random lifts evaluated", random_runs, "==", 50);
  add(r, "triangle+centroid: sign of delta S constant", tc.sign_constant ? 1.0 : 0.0, "==", 1.0);
  add(r, "triangle+centroid: max Richardson deviation (h <= 1e-3)", tc.max_richardson_deviation, "<", 0.05);
  r.notes.push_back("triangle+centroid: c_{n-1} = " + fmt("%.6g", tc.c_nm1) + ", delta S sign " + std::to_string(tc.sign) +
                    ", predicted rho limit " + fmt("%.6g", tc.predicted_rho) + ", worst observed relative offset " +
                    fmt("%.3g", worst_limit));

  LiftConfig sq_cfg = cfg;
  sq_cfg.random_lifts = 0;
  const LiftReport sq = lift_experiment(unit_square(), plane, sq_cfg);
  double diagonal = std::numeric_limits<double>::infinity();
  for (const auto& run : sq.runs) {
    if (run.label != "class X1") continue;
    diagonal = 0.0;
    for (const auto& s : run.samples) diagonal = std::max(diagonal, std::abs(s.delta_s));
  }
  std::vector<double> ts;
  for (int i = 0; i <= 50; ++i) ts.push_back(0.01 * i);
  double preset = 0.0;
  for (const auto& s : trace_path(rectangle_path(0.5, 0.5), ts).samples) preset = std::max(preset, std::abs(s.s));
  add(r, "square: diagonal-pair lift max |S|", std::max(diagonal, preset), "<", 1e-10);
  double trap = 0.0;
  for (const auto& s : trace_path(trapezoid_path(2.0, 3.0, 1.5), ts).samples) trap = std::max(trap, std::abs(s.s));
  add(r, "trapezoid family (l=2, d=3, p=1.5), t in [0, 0.5]: max |S|", trap, "<", 1e-10);
}

// 10: the differential ratio tends to 1.
void lemma_ratio(std::uint64_t, CriterionResult& r) {
  MotionPath flat;
  flat.space = SpaceForm::euclidean(3);
  flat.evaluate = [](double t) {
    return PointList{Point{{0.0, 0.0, 0.0}}, Point{{1.0, 0.0, 0.0}}, Point{{0.0, 1.0, 0.0}}, Point{{1.0 / 3, 1.0 / 3, t}}};
  };
  const std::pair<const char*, MotionPath> paths[] = {{"triangle+centroid", flat},
                                                      {"spherical interior point", spherical_interior_lift_path()}};
  for (const auto& [name, path] : paths) {
    const LemmaRatioReport rep = lemma_ratio_check(path, {1e-2, 5e-3});
    const std::string tag = std::string(name) + ": ";
    add(r, tag + "indeterminate", rep.indeterminate ? 1.0 : 0.0, "==", 0.0);
    if (rep.indeterminate) continue;
    const double r1 = rep.samples[0].ratio;
    const double r2 = rep.samples[1].ratio;
    add(r, tag + "ratio at t=1e-2 (lower)", r1, ">=", 0.95);
    add(r, tag + "ratio at t=1e-2 (upper)", r1, "<=", 1.05);
    add(r, tag + "|ratio - 1| at t=5e-3 below its value at 1e-2", std::abs(r2 - 1.0), "<", std::abs(r1 - 1.0));
  }
}

// 11: Minkowski relation and the Gauss-map limit.
void minkowski_gauss(std::uint64_t seed, CriterionResult& r) {
  for (int n = 1; n <= 3; ++n) {
    Rng rng = make_rng(seed, stream_id(11, n));
    RadonPartition alternating;
    for (int i = 0; i < n + 2; ++i) (i % 2 == 0 ? alternating.x1 : alternating.x2).push_back(i);
    double plain = 0.0, signed_sum = 0.0;
    for (int i = 0; i < 500; ++i) {
      const PointList s = random_simplex(SpaceForm::euclidean(n + 1), n + 1, rng);
      const MinkowskiResult m = minkowski_residual(s, alternating);
      plain = std::max(plain, m.plain);
      signed_sum = std::max(signed_sum, m.partition_signed);
    }
    add(r, "n=" + std::to_string(n) + " (500 simplices): Minkowski residual", plain, "<", 1e-10);
    add(r, "n=" + std::to_string(n) + ": partition-signed residual", signed_sum, "<", 1e-10);
  }
  Eigen::VectorXd heights(4);
  heights << 0.3, -0.7, 0.2, 0.9;
  const PointList rect = pts2({{2, 1}, {-2, 1}, {-2, -1}, {2, -1}});
  const std::vector<double> ts{0.2, 0.1, 0.05, 0.02, 0.01, 0.005};
  const GaussMapReport gm = gauss_map_limit(generic_lift_path(rect, SpaceForm::euclidean(2), heights), ts);
  add(r, "rectangle generic lift: residual decreases monotonically", gm.monotone ? 1.0 : 0.0, "==", 1.0);
  add(r, "rectangle generic lift: residual at t=5e-3", gm.final_residual, "<", 1e-3);
  const GaussMapReport preset = gauss_map_limit(rectangle_path(2.0, 1.0), ts);
  add(r, "rectangle preset: max residual", *std::max_element(preset.residual.begin(), preset.residual.end()), "<", 1e-8);
  r.notes.push_back("the 1e-3 Gauss-map threshold is an engineering choice");
}

}  // namespace

bool CriterionResult::passed() const {
  return error.empty() && !metrics.empty() &&
         std::all_of(metrics.begin(), metrics.end(), [](const Metric& m) { return m.passed; });
}

const std::vector<CriterionSpec>& criteria() {
  static const std::vector<CriterionSpec> all{
      {1, "stress", "partition-sum identity", partition_identity},
      {2, "stress", "case-0 exactness", case_zero},
      {3, "stress", "spherical facet-sum inequality", spherical_sum},
      {4, "invariants", "probe-point invariance of c_k", invariance},
      {5, "invariants", "Euclidean root structure", root_structure},
      {6, "invariants", "curved c_1 consistency", curved_c1},
      {7, "dual", "duality relations", duality},
      {8, "dual", "c_{n-1} and cospherical dual crossings", crossing},
      {9, "motion", "lifting obstruction", lifting},
      {10, "motion", "differential ratio", lemma_ratio},
      {11, "motion", "Minkowski relation and Gauss-map limit", minkowski_gauss},
  };
  return all;
}

CriterionResult run_criterion(const CriterionSpec& spec, std::uint64_t seed) {
  CriterionResult r;
  r.id = spec.id;
  r.suite = spec.suite;
  r.title = spec.title;
  try {
    spec.run(seed, r);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<CriterionResult> run_suite(const std::string& suite, std::uint64_t seed) {
  if (suite != "all" && suite != "stress" && suite != "invariants" && suite != "dual" && suite != "motion") {
    throw InputError("unknown suite '" + suite + "' (stress, invariants, dual, motion, all)");
  }
  std::vector<CriterionResult> out;
  for (const auto& spec : criteria()) {
    if (suite == "all" || spec.suite == suite) out.push_back(run_criterion(spec, seed));
  }
  return out;
}

Json to_json(const CriterionResult& r) {
  Json j;
  j["id"] = r.id;
  j["suite"] = r.suite;
  j["title"] = r.title;
  j["passed"] = r.passed();
  Json metrics = Json::array();
  for (const auto& m : r.metrics) {
    metrics.push_back(Json{{"name", m.name}, {"value", m.value}, {"relation", m.relation}, {"bound", m.bound}, {"passed", m.passed}});
  }
  j["metrics"] = metrics;
  j["notes"] = r.notes;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

std::string summary_line(const CriterionResult& r) {
  std::string line = std::string(r.passed() ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + ". " + r.title;
  if (!r.error.empty()) return line + "  [error: " + r.error + "]";
  const Metric* worst = nullptr;
  for (const auto& m : r.metrics) {
    if (!m.passed) {
      worst = &m;
      break;
    }
  }
  if (worst != nullptr) {
    char buf[96];
    std::snprintf(buf, sizeof buf, " = %.3g, need %s %.3g", worst->value, worst->relation.c_str(), worst->bound);
    line += "  [" + worst->name + buf + "]";
  }
  return line;
}

}  // namespace simplexlift::cli
