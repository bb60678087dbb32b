#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "simplexlift/dual.hpp"
#include "simplexlift/errors.hpp"
#include "simplexlift/invariants.hpp"
#include "simplexlift/linalg.hpp"
#include "simplexlift/motion.hpp"
#include "simplexlift/stress.hpp"
#include "suites.hpp"

namespace simplexlift::cli {

namespace {

constexpr double kAlphaOverrideTol = 1e-8;
constexpr double kSimilarTol = 1e-9;

struct Context {
  InputDocument doc;
  SpaceForm space = SpaceForm::euclidean(1);
  PointList points;
  Tolerances tol;
  QuadratureConfig quad;
  std::uint64_t seed = kDefaultSeed;
};

Tolerances merged_tolerances(const Options& opt, const std::optional<Tolerances>& from_doc) {
  Tolerances tol = from_doc.value_or(Tolerances{});
  if (opt.tol) tol.rank = *opt.tol;
  if (opt.quad_depth) tol.quad_depth = *opt.quad_depth;
  if (opt.quad_tol) tol.quad_rel = *opt.quad_tol;
  if (!(tol.rank > 0.0)) throw InputError("--tol must be positive");
  return tol;
}

Context load(const Options& opt) {
  if (opt.input.empty()) throw InputError("an input document is required");
  Context ctx;
  ctx.doc = read_input(opt.input);
  ctx.space = document_space(ctx.doc);
  ctx.points = document_points(ctx.doc, ctx.space);
  ctx.tol = merged_tolerances(opt, ctx.doc.tolerances);
  ctx.quad = quadrature_config(ctx.tol);
  ctx.seed = opt.seed.value_or(ctx.doc.seed.value_or(kDefaultSeed));
  return ctx;
}

void require_json(const Options& opt, const char* command) {
  if (opt.format != "json") throw InputError(std::string(command) + " writes JSON only");
}

OneStress resolve_alpha(const Context& ctx) {
  if (!ctx.doc.alpha) return solve_one_stress(ctx.points, ctx.space, ctx.tol.rank);
  const auto& raw = *ctx.doc.alpha;
  if (raw.size() != ctx.points.size()) throw InputError("alpha override needs one coefficient per vertex");
  OneStress alpha{Eigen::Map<const Eigen::VectorXd>(raw.data(), static_cast<Eigen::Index>(raw.size()))};
  normalize_stress(alpha.alpha);  // rejects zero and non-finite vectors
  const double res = one_stress_residual(OneStress{alpha.alpha / alpha.alpha.norm()}, ctx.points, ctx.space);
  if (res > kAlphaOverrideTol) {
    throw InputError("alpha override is not a dependence of the vertices (residual " + std::to_string(res) + ")");
  }
  return alpha;
}

Json roots_json(const std::vector<std::complex<double>>& roots) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(Json::array({r.real(), r.imag()}));
  return out;
}

Json alpha_json(const OneStress& alpha, const Context& ctx) {
  return Json{{"values", vector_json(alpha.alpha)},
              {"normalization", ctx.doc.alpha ? "as given" : OneStress::kNormalization},
              {"residual", one_stress_residual(OneStress{alpha.alpha / alpha.alpha.norm()}, ctx.points, ctx.space)}};
}

Json space_json(const Context& ctx) {
  return Json{{"curvature", ctx.space.curvature()},
              {"n", ctx.doc.dim},
              {"ambient_dim", ctx.space.dim()},
              {"vertex_count", ctx.points.size()}};
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<double> default_trace_grid() {
  std::vector<double> ts;
  for (int i = 0; i <= 10; ++i) ts.push_back(0.05 * i);
  return ts;
}

CommandResult lift_preset(const Options& opt) {
  MotionPath path;
  if (opt.preset == "rectangle") {
    path = rectangle_path(opt.a, opt.b);
  } else if (opt.preset == "trapezoid") {
    path = trapezoid_path(opt.leg, opt.diagonal, opt.half_base);
  } else {
    throw InputError("unknown preset '" + opt.preset + "' (rectangle, trapezoid)");
  }
  const Tolerances tol = merged_tolerances(opt, std::nullopt);
  const std::vector<double> ts = opt.heights.empty() ? default_trace_grid() : parse_double_list(opt.heights);
  const MotionTrace trace = trace_path(path, ts, quadrature_config(tol));
  const std::size_t facets = trace.samples.empty() ? 0 : path.evaluate(path.t_min).size();

  if (opt.format == "csv") {
    std::ostringstream out;
    out << "t,S,A0A1_sq";
    for (std::size_t i = 1; i <= facets; ++i) out << ",V_" << i;
    out << "\n";
    for (const auto& s : trace.samples) {
      out << csv_number(s.t) << ',' << csv_number(s.s) << ',' << csv_number(s.gap_squared);
      for (std::size_t i = 0; i < facets; ++i) out << ',' << (i < s.volumes.size() ? csv_number(s.volumes[i]) : "nan");
      out << "\n";
    }
    return {out.str(), kOk};
  }
  require_json(opt, "lift");
  Json j = report_header("lift", opt.seed.value_or(kDefaultSeed), tol, opt.timestamp);
  Json params;
  for (const auto& [k, v] : path.parameters) params[k] = v;
  j["path"] = Json{{"kind", to_string(path.kind)}, {"parameters", params}, {"smoothness", to_string(path.smoothness)}};
  j["partition"] = Json{{"X1", index_json(trace.partition.x1)}, {"X2", index_json(trace.partition.x2)},
                        {"case", trace.partition.case_id}, {"target", trace.partition.target}};
  Json samples = Json::array();
  double worst = 0.0;
  for (const auto& s : trace.samples) {
    Json row{{"t", s.t}, {"S", s.s}, {"A0A1_sq", s.gap_squared}, {"volumes", s.volumes}};
    if (!s.diagnostic.empty()) row["diagnostic"] = s.diagnostic;
    samples.push_back(row);
    if (std::isfinite(s.s)) worst = std::max(worst, std::abs(s.s));
  }
  j["samples"] = samples;
  j["max_abs_S"] = worst;
  return {j.dump(2) + "\n", kOk};
}

CommandResult lift_random(const Options& opt) {
  const Context ctx = load(opt);
  LiftConfig cfg;
  cfg.random_lifts = opt.random.value_or(50);
  if (cfg.random_lifts < 0) throw InputError("--random must be non-negative");
  if (!opt.heights.empty()) cfg.heights = parse_double_list(opt.heights);
  cfg.seed = ctx.seed;
  const LiftReport rep = lift_experiment(ctx.points, ctx.space, cfg, ctx.quad);

  if (opt.format == "csv") {
    std::ostringstream out;
    out << "label,h,delta_S,A0A1_sq,rho\n";
    for (const auto& run : rep.runs) {
      for (const auto& s : run.samples) {
        out << run.label << ',' << csv_number(s.h) << ',' << csv_number(s.delta_s) << ',' << csv_number(s.gap_squared)
            << ',' << csv_number(s.rho) << "\n";
      }
    }
    return {out.str(), kOk};
  }
  require_json(opt, "lift");
  Json j = report_header("lift", ctx.seed, ctx.tol, opt.timestamp);
  j["space"] = space_json(ctx);
  j["partition"] = Json{{"X1", index_json(rep.partition.x1)}, {"X2", index_json(rep.partition.x2)},
                        {"case", rep.partition.case_id}, {"target", rep.partition.target}};
  j["c_n_minus_1"] = rep.c_nm1;
  j["predicted_rho"] = rep.predicted_rho;
  j["sign_constant"] = rep.sign_constant;
  j["sign"] = rep.sign;
  j["max_richardson_deviation"] = rep.max_richardson_deviation;
  j["min_abs_delta_S"] = Json{{"value", rep.min_abs_delta_s}, {"run", rep.min_abs_delta_s_label}};
  Json runs = Json::array();
  for (const auto& run : rep.runs) {
    Json r{{"label", run.label}, {"excluded", run.excluded}};
    if (!run.diagnostic.empty()) r["diagnostic"] = run.diagnostic;
    Json samples = Json::array();
    for (const auto& s : run.samples) {
      samples.push_back(Json{{"h", s.h}, {"delta_S", s.delta_s}, {"A0A1_sq", s.gap_squared}, {"rho", s.rho}});
    }
    r["samples"] = samples;
    r["richardson_deviation"] = run.richardson_deviation;
    r["rho_limit"] = run.rho_limit;
    runs.push_back(r);
  }
  j["runs"] = runs;
  return {j.dump(2) + "\n", kOk};
}

}  // namespace

CommandResult cmd_analyze(const Options& opt) {
  require_json(opt, "analyze");
  const Context ctx = load(opt);
  const OneStress alpha = resolve_alpha(ctx);
  const int count = static_cast<int>(ctx.points.size());
  const int n = count - 2;

  Json j = report_header("analyze", ctx.seed, ctx.tol, opt.timestamp);
  j["space"] = space_json(ctx);
  j["alpha"] = alpha_json(alpha, ctx);

  const RadonPartition part = radon_partition(alpha, ctx.space);
  const PartitionSums sums = partition_sums(ctx.points, part, ctx.space, ctx.quad);
  Json volumes = Json::array();
  for (int i = 0; i < count; ++i) {
    const VolumeResult& v = sums.facets[static_cast<std::size_t>(i)];
    volumes.push_back(Json{{"facet", i + 1}, {"value", v.value}, {"error_estimate", v.error_estimate}, {"method", to_string(v.method)}});
  }
  j["partition"] = Json{{"X1", index_json(part.x1)},
                        {"X2", index_json(part.x2)},
                        {"case", part.case_id},
                        {"target", part.target},
                        {"sum_X1", sums.sum1},
                        {"sum_X2", sums.sum2},
                        {"S", sums.sum1 - sums.sum2 - part.target},
                        {"error_estimate", sums.error_estimate},
                        {"facet_volumes", volumes}};

  const InvariantSequence inv = invariant_sequence(ctx.points, alpha, ctx.space, std::nullopt, std::nullopt, ctx.quad);
  Json invj{{"route", to_string(inv.route)}, {"c", inv.c}, {"error_estimate", inv.error}};
  if (inv.c1_g_route) invj["c1_g_route"] = *inv.c1_g_route;
  j["invariants"] = invj;

  const RootTolerances rt;
  const CharPoly cp = characteristic_polynomial(inv, rt);
  Json cpj{{"coefficients", cp.coeffs},
           {"roots", roots_json(cp.roots)},
           {"zero_roots", cp.zero_roots},
           {"max_imag_ratio", cp.max_imag_ratio},
           {"all_real", cp.all_real},
           {"root_tolerances", Json{{"zero", rt.zero_tol}, {"imag_relative", rt.imag_rel_tol}}}};
  if (!cp.diagnostic.empty()) cpj["diagnostic"] = cp.diagnostic;
  j["charpoly"] = cpj;

  Json diag;
  Json induced = Json::array();
  for (int order = 2; order <= n + 1; ++order) {
    const KStress omega = induce_stress(alpha, ctx.points, order - 1, ctx.space);
    induced.push_back(Json{{"order", order}, {"residual", stress_residual(omega, ctx.points, ctx.space)}});
  }
  diag["induced_stress_residuals"] = induced;
  if (!ctx.space.curved()) {
    if (n >= 2) diag["charpoly_matrix_deviation"] = charpoly_matrix_check(ctx.points, alpha);
    const SphereFit fit = cocircularity_test(intrinsic_coordinates(ctx.points));
    diag["vertex_sphere_residual"] = fit.residual;
  } else {
    diag["affine_dependence_sum"] = affine_dependence_test(alpha, ctx.space);
  }
  j["diagnostics"] = diag;
  return {j.dump(2) + "\n", kOk};
}

CommandResult cmd_dual(const Options& opt) {
  require_json(opt, "dual");
  const Context ctx = load(opt);
  if (ctx.space.curved()) throw UnsupportedError("the dual configuration is defined for Euclidean input only");
  const double c = opt.c.value_or(ctx.doc.c.value_or(1.0));
  const DualConfiguration dual = construct_dual(ctx.points, c);
  const SpaceForm plane = SpaceForm::euclidean(ctx.doc.dim);
  const OneStress alpha = solve_one_stress(dual.a, plane, ctx.tol.rank);
  const RBetaReport rb = compute_r_and_beta(dual.a, dual.b, alpha);
  const MatrixIdentityReport mi = matrix_identities(dual.a, dual.b, alpha, rb.beta, rb.r);
  const CharPoly f = characteristic_polynomial(invariant_sequence(dual.a, alpha, plane));
  const CharPoly g = characteristic_polynomial(invariant_sequence(dual.b, rb.beta, plane));
  const ReciprocityReport rr = root_reciprocity(f, g);
  const double similarity = similarity_residual(dual.b, dual.a);

  Json j = report_header("dual", ctx.seed, ctx.tol, opt.timestamp);
  j["space"] = space_json(ctx);
  j["alpha"] = alpha_json(alpha, ctx);
  Json pairs = Json::array();
  for (const auto& [lam, mu] : rr.pairs) pairs.push_back(Json::array({lam.real(), lam.imag(), mu.real(), mu.imag()}));
  j["dual"] = Json{{"c", dual.c},
                   {"translation", vector_json(dual.translation)},
                   {"a_canonical", points_json(dual.a)},
                   {"b", points_json(dual.b)},
                   {"orthogonality_residual", duality_residual(dual.a, dual.b)},
                   {"r", rb.r},
                   {"r_spread", rb.r_spread},
                   {"beta", vector_json(rb.beta.alpha)},
                   {"beta_alpha_deviation", rb.beta_alpha_deviation},
                   {"coupling", rb.coupling},
                   {"coupling_spread", rb.coupling_spread},
                   {"matrix_identities", Json{{"off_diagonal", mi.off_diagonal},
                                              {"diagonal_vs_r", mi.diagonal_vs_r},
                                              {"identity_constant", mi.identity_constant},
                                              {"identity_residual", mi.identity_residual}}},
                   {"reciprocity", Json{{"c_hat", rr.c_hat}, {"residual", rr.residual}, {"pairs", pairs}}},
                   {"b_sphere_residual", cocircularity_test(dual.b).residual},
                   {"similarity_residual", similarity},
                   {"similar", similarity < kSimilarTol},
                   {"similarity_tolerance", kSimilarTol}};
  return {j.dump(2) + "\n", kOk};
}

CommandResult cmd_lift(const Options& opt) {
  if (!opt.preset.empty()) {
    if (opt.random) throw InputError("--preset and --random are exclusive");
    return lift_preset(opt);
  }
  return lift_random(opt);
}

CommandResult cmd_verify(const Options& opt) {
  const std::uint64_t seed = opt.seed.value_or(kDefaultSeed);
  const std::vector<CriterionResult> results = run_suite(opt.suite, seed);
  bool all = true;
  for (const auto& r : results) all = all && r.passed();
  const int code = all ? kOk : kVerification;
  if (opt.format == "text") {
    std::string text;
    for (const auto& r : results) text += summary_line(r) + "\n";
    return {text, code};
  }
  require_json(opt, "verify");
  Json j = report_header("verify", seed, Tolerances{}, opt.timestamp);
  j["suite"] = opt.suite;
  j["passed"] = all;
  Json list = Json::array();
  for (const auto& r : results) list.push_back(to_json(r));
  j["criteria"] = list;
  return {j.dump(2) + "\n", code};
}

CommandResult cmd_sample(const Options& opt) {
  require_json(opt, "sample");
  const std::uint64_t seed = opt.seed.value_or(kDefaultSeed);
  Json j = report_header("sample", seed, Tolerances{}, opt.timestamp);
  j["theorem"] = opt.theorem;
  if (opt.theorem == "spherical-sum") {
    const int d = opt.d.value_or(opt.n + 1);
    const SphericalSumStats st = spherical_sum_sample(opt.n, d, opt.count, seed);
    j["n"] = st.n;
    j["d"] = st.d;
    j["count"] = st.count;
    j["resampled"] = st.resampled;
    j["sphere_volume"] = unit_sphere_volume(st.n);
    j["max_gap"] = st.max_gap;
    j["min_gap"] = st.min_gap;
    j["mean_gap"] = st.mean_gap;
    j["all_below"] = st.all_below;
  } else if (opt.theorem == "near-case-zero") {
    const std::vector<double> hs = opt.heights.empty() ? std::vector<double>{1e-1, 1e-2, 1e-3, 1e-4}
                                                       : parse_double_list(opt.heights);
    j["n"] = opt.n;
    j["sphere_volume"] = unit_sphere_volume(opt.n);
    Json rows = Json::array();
    for (const auto& [h, sum] : near_case_zero_probe(opt.n, seed, hs)) {
      rows.push_back(Json{{"h", h}, {"facet_sum", sum}, {"gap", sum - unit_sphere_volume(opt.n)}});
    }
    j["samples"] = rows;
  } else {
    throw InputError("unknown theorem '" + opt.theorem + "' (spherical-sum, near-case-zero)");
  }
  return {j.dump(2) + "\n", kOk};
}

int exit_code_for(const std::exception& e, std::string& message) {
  const std::string what = e.what();
  if (dynamic_cast<const InputError*>(&e)) {
    message = "invalid input: " + what;
    return kInvalidInput;
  }
  if (dynamic_cast<const UnsupportedError*>(&e)) {
    message = "unsupported: " + what;
    return kInvalidInput;
  }
  if (dynamic_cast<const nlohmann::json::exception*>(&e)) {
    message = "invalid input: " + what;
    return kInvalidInput;
  }
  if (dynamic_cast<const NotDegenerateError*>(&e)) {
    message = "assumption violated (degenerate configuration): " + what;
    return kAssumption;
  }
  if (dynamic_cast<const DegenerateFaceError*>(&e)) {
    message = "assumption violated (non-degenerate facets): " + what;
    return kAssumption;
  }
  if (dynamic_cast<const SingularConfigurationError*>(&e)) {
    message = "assumption violated (generic probe points): " + what;
    return kAssumption;
  }
  if (dynamic_cast<const ConstructionError*>(&e)) {
    message = "assumption violated (non-singular dual construction): " + what;
    return kAssumption;
  }
  if (dynamic_cast<const AssumptionViolation*>(&e)) {
    message = "assumption violated: " + what;
    return kAssumption;
  }
  if (dynamic_cast<const DualityViolation*>(&e)) {
    message = "verification failed: " + what;
    return kVerification;
  }
  if (dynamic_cast<const InternalConsistencyError*>(&e)) {
    message = "internal consistency check failed: " + what;
    return kVerification;
  }
  message = "error: " + what;
  return kVerification;
}

}  // namespace simplexlift::cli
