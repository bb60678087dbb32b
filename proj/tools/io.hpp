#pragma once

// Input documents, report plumbing and serialization for the command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "simplexlift/spaces.hpp"

namespace simplexlift::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct Tolerances {
  /// Relative singular-value threshold of the stress solver.
  double rank = 1e-10;
  double quad_rel = 1e-10;
  int quad_depth = 10;

  bool operator==(const Tolerances&) const = default;
};

/// space.dim is the dimension n of the M^n holding the configuration, so an
/// analysis document carries n + 2 vertices. Coordinates may live in a larger
/// ambient space (length >= n flat, >= n + 1 curved); the space the numbers
/// are computed in is read off the coordinate length.
struct InputDocument {
  int schema_version = kSchemaVersion;
  int curvature = 0;
  int dim = 0;
  std::vector<std::vector<double>> vertices;
  std::optional<std::vector<double>> alpha;
  std::optional<double> c;
  std::optional<Tolerances> tolerances;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Throws InputError on a malformed document.
InputDocument parse_input(const std::string& text);
InputDocument read_input(const std::string& path);
Json to_json(const InputDocument& doc);

/// Checks the vertex count and coordinate lengths and projects curved points
/// onto their quadric. Returns the ambient space of the coordinates.
SpaceForm document_space(const InputDocument& doc);
PointList document_points(const InputDocument& doc, const SpaceForm& space);

QuadratureConfig quadrature_config(const Tolerances& tol);
Json to_json(const Tolerances& tol);

Json vector_json(const Eigen::VectorXd& v);
Json points_json(const PointList& points);
/// 1-based labels, as used throughout reports.
Json index_json(const std::vector<int>& zero_based);

/// Common header: tool, version, schema, command, seed, tolerances and,
/// unless suppressed, a generated_at timestamp (the only non-deterministic field).
Json report_header(const std::string& command, std::uint64_t seed, const Tolerances& tol, bool timestamp);

/// Writes to `path`, or to standard output when it is empty.
void emit(const std::string& text, const std::string& path);

/// Comma-separated list of doubles.
std::vector<double> parse_double_list(const std::string& text);

}  // namespace simplexlift::cli
