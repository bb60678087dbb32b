#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "commands.hpp"
#include "io.hpp"
#include "simplexlift/errors.hpp"
#include "suites.hpp"

using namespace simplexlift;
using namespace simplexlift::cli;

namespace {

std::string data(const std::string& name) { return std::string(SIMPLEXLIFT_DATA_DIR) + "/" + name; }

Json run_json(const CommandResult& r) { return Json::parse(r.text); }

/// Writes `text` to a fresh temporary file and returns its path.
std::string temp_input(const std::string& text) {
  static int counter = 0;
  const auto path = std::filesystem::temp_directory_path() / ("simplexlift_test_" + std::to_string(::getpid()) + "_" +
                                                               std::to_string(counter++) + ".json");
  std::ofstream(path) << text;
  return path.string();
}

Options analyze_opts(const std::string& input) {
  Options o;
  o.input = input;
  o.timestamp = false;
  return o;
}

int exit_code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    std::string msg;
    return exit_code_for(e, msg);
  }
  return kOk;
}

}  // namespace

TEST(InputDocument, RoundTripsBitIdentically) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int rep = 0; rep < 50; ++rep) {
    InputDocument doc;
    doc.curvature = 0;
    doc.dim = 2;
    for (int i = 0; i < 4; ++i) doc.vertices.push_back({u(rng), u(rng) * 1e-200, std::ldexp(u(rng), -60)});
    doc.alpha = std::vector<double>{u(rng), u(rng), 1.0 / 3.0, -0.1};
    doc.c = u(rng);
    doc.seed = rng();
    doc.tolerances = Tolerances{1e-11, 3e-9, 12};
    const InputDocument back = parse_input(to_json(doc).dump());
    EXPECT_EQ(back, doc);
  }
}

TEST(InputDocument, Validation) {
  EXPECT_THROW(parse_input("not json"), InputError);
  EXPECT_THROW(parse_input(R"({"vertices": [[0, 0]]})"), InputError);
  EXPECT_THROW(parse_input(R"({"schema_version": 9, "space": {"curvature": 0, "dim": 1}, "vertices": []})"), InputError);
  InputDocument doc = parse_input(R"({"space": {"curvature": 0, "dim": 2}, "vertices": [[0, 0], [1, 0], [0, 1]]})");
  EXPECT_THROW(document_space(doc), InputError);  // needs dim + 2 vertices
  doc = parse_input(R"({"space": {"curvature": 0, "dim": 2}, "vertices": [[0, 0], [1, 0], [0, 1], [1]]})");
  EXPECT_THROW(document_space(doc), InputError);
  doc = parse_input(R"({"space": {"curvature": 1, "dim": 1}, "vertices": [[1, 0], [0, 1], [2, 0]]})");
  const SpaceForm s = document_space(doc);
  EXPECT_EQ(s.dim(), 1);
  EXPECT_THROW(document_points(doc, s), InputError);  // (2, 0) is off the circle
}

TEST(InputDocument, AmbientSpaceComesFromCoordinates) {
  const InputDocument doc = read_input(data("not_degenerate.json"));
  const SpaceForm s = document_space(doc);
  EXPECT_EQ(s.dim(), 3);
  EXPECT_EQ(doc.dim, 2);
}

TEST(Analyze, Square) {
  const Json j = run_json(cmd_analyze(analyze_opts(data("square.json"))));
  EXPECT_EQ(j["partition"]["case"], 2);
  EXPECT_EQ(j["partition"]["X1"], Json::parse("[1, 3]"));
  EXPECT_NEAR(j["invariants"]["c"][1].get<double>(), 0.0, 1e-14);
  EXPECT_EQ(j["charpoly"]["zero_roots"], 1);
  EXPECT_FALSE(j.contains("generated_at"));
  EXPECT_EQ(j["tolerances"]["rank"], 1e-10);
}

TEST(Analyze, TriangleCentroidWithAlphaOverride) {
  const Json j = run_json(cmd_analyze(analyze_opts(data("triangle_centroid.json"))));
  EXPECT_EQ(j["partition"]["case"], 1);
  EXPECT_EQ(j["partition"]["X2"], Json::parse("[4]"));
  EXPECT_NEAR(j["invariants"]["c"][1].get<double>(), 4.0 / 3.0, 1e-14);
  EXPECT_EQ(j["alpha"]["normalization"], "as given");
}

TEST(Analyze, BadAlphaOverrideIsInvalidInput) {
  const std::string path = temp_input(
      R"({"space": {"curvature": 0, "dim": 2}, "vertices": [[0, 0], [1, 0], [0, 1], [0.3, 0.3]], "alpha": [1, 1, 1, -1]})");
  EXPECT_EQ(exit_code_of([&] { cmd_analyze(analyze_opts(path)); }), kInvalidInput);
}

TEST(Analyze, NonDegenerateIsAnAssumptionViolation) {
  try {
    cmd_analyze(analyze_opts(data("not_degenerate.json")));
    FAIL() << "expected an exception";
  } catch (const std::exception& e) {
    std::string msg;
    EXPECT_EQ(exit_code_for(e, msg), kAssumption);
    EXPECT_NE(msg.find("configuration is not degenerate"), std::string::npos);
  }
}

TEST(Analyze, SphereThirdsIsCaseZero) {
  const Json j = run_json(cmd_analyze(analyze_opts(data("sphere_thirds.json"))));
  EXPECT_EQ(j["partition"]["case"], 0);
  EXPECT_NEAR(j["partition"]["S"].get<double>(), 0.0, 1e-12);
}

TEST(Analyze, CsvIsRejected) {
  Options o = analyze_opts(data("square.json"));
  o.format = "csv";
  EXPECT_EQ(exit_code_of([&] { cmd_analyze(o); }), kInvalidInput);
}

TEST(Dual, OrthocenterIsSimilar) {
  const Json j = run_json(cmd_dual(analyze_opts(data("orthocenter.json"))));
  EXPECT_TRUE(j["dual"]["similar"].get<bool>());
  EXPECT_LT(j["dual"]["orthogonality_residual"].get<double>(), 1e-12);
}

TEST(Dual, CurvedInputIsUnsupported) {
  EXPECT_EQ(exit_code_of([&] { cmd_dual(analyze_opts(data("sphere_thirds.json"))); }), kInvalidInput);
}

TEST(Lift, RectangleCsv) {
  Options o;
  o.preset = "rectangle";
  o.a = 2.0;
  o.b = 1.0;
  o.format = "csv";
  const CommandResult r = cmd_lift(o);
  std::istringstream in(r.text);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "t,S,A0A1_sq,V_1,V_2,V_3,V_4");
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto first = line.find(',');
    const auto second = line.find(',', first + 1);
    EXPECT_LT(std::abs(std::stod(line.substr(first + 1, second - first - 1))), 1e-10) << line;
  }
  EXPECT_EQ(rows, 11);
}

TEST(Lift, UnknownPreset) {
  Options o;
  o.preset = "hexagon";
  EXPECT_EQ(exit_code_of([&] { cmd_lift(o); }), kInvalidInput);
}

TEST(Lift, RandomLiftsReport) {
  Options o = analyze_opts(data("triangle_centroid.json"));
  o.random = 4;
  o.heights = "1e-3,5e-4,2.5e-4";
  const Json j = run_json(cmd_lift(o));
  EXPECT_TRUE(j["sign_constant"].get<bool>());
  EXPECT_EQ(j["runs"].size(), 4u + 4u + 2u);
}

TEST(Verify, DeterministicWithoutTimestamp) {
  Options o;
  o.suite = "dual";
  o.timestamp = false;
  const CommandResult a = cmd_verify(o);
  const CommandResult b = cmd_verify(o);
  EXPECT_EQ(a.text, b.text);
  EXPECT_EQ(a.exit_code, kOk);
}

TEST(Verify, UnknownSuite) {
  EXPECT_THROW(run_suite("geometry", 1), InputError);
}

TEST(Verify, TimestampIsTheOnlyExtraField) {
  Options o;
  o.theorem = "spherical-sum";
  o.count = 10;
  Json with = run_json(cmd_sample(o));
  o.timestamp = false;
  const Json without = run_json(cmd_sample(o));
  ASSERT_TRUE(with.contains("generated_at"));
  with.erase("generated_at");
  EXPECT_EQ(with, without);
}

TEST(ExitCodes, Mapping) {
  std::string msg;
  EXPECT_EQ(exit_code_for(InputError("x"), msg), kInvalidInput);
  EXPECT_EQ(exit_code_for(UnsupportedError("x"), msg), kInvalidInput);
  EXPECT_EQ(exit_code_for(DegenerateFaceError("x", 2), msg), kAssumption);
  EXPECT_NE(msg.find("non-degenerate facets"), std::string::npos);
  EXPECT_EQ(exit_code_for(ConstructionError("x"), msg), kAssumption);
  EXPECT_EQ(exit_code_for(DualityViolation("x"), msg), kVerification);
}

TEST(Io, DoubleList) {
  EXPECT_EQ(parse_double_list("1e-2,5e-3"), (std::vector<double>{1e-2, 5e-3}));
  EXPECT_THROW(parse_double_list("1,abc"), InputError);
  EXPECT_THROW(parse_double_list(""), InputError);
}
