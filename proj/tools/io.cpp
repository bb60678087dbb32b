#include "io.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "simplexlift/errors.hpp"

namespace simplexlift::cli {

namespace {

template <typename T>
T field(const Json& obj, const char* key, const char* what) {
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid or missing field '") + key + "' (" + what + "): " + e.what());
  }
}

}  // namespace

InputDocument parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("input is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("input document must be a JSON object");
  InputDocument doc;
  if (j.contains("schema_version")) {
    doc.schema_version = field<int>(j, "schema_version", "integer");
    if (doc.schema_version != kSchemaVersion) {
      throw InputError("unsupported schema_version " + std::to_string(doc.schema_version));
    }
  }
  const Json space = j.contains("space") ? j.at("space") : Json();
  if (!space.is_object()) throw InputError("missing 'space' object");
  doc.curvature = field<int>(space, "curvature", "-1, 0 or 1");
  doc.dim = field<int>(space, "dim", "positive integer");
  doc.vertices = field<std::vector<std::vector<double>>>(j, "vertices", "list of coordinate lists");
  if (j.contains("alpha")) doc.alpha = field<std::vector<double>>(j, "alpha", "list of numbers");
  if (j.contains("c")) doc.c = field<double>(j, "c", "number");
  if (j.contains("seed")) doc.seed = field<std::uint64_t>(j, "seed", "non-negative integer");
  if (j.contains("tolerances")) {
    const Json& t = j.at("tolerances");
    if (!t.is_object()) throw InputError("'tolerances' must be an object");
    Tolerances tol;
    if (t.contains("rank")) tol.rank = field<double>(t, "rank", "number");
    if (t.contains("quad_rel")) tol.quad_rel = field<double>(t, "quad_rel", "number");
    if (t.contains("quad_depth")) tol.quad_depth = field<int>(t, "quad_depth", "integer");
    doc.tolerances = tol;
  }
  return doc;
}

InputDocument read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_input(ss.str());
}

Json to_json(const Tolerances& tol) {
  return Json{{"rank", tol.rank}, {"quad_rel", tol.quad_rel}, {"quad_depth", tol.quad_depth}};
}

Json to_json(const InputDocument& doc) {
  Json j;
  j["schema_version"] = doc.schema_version;
  j["space"] = Json{{"curvature", doc.curvature}, {"dim", doc.dim}};
  j["vertices"] = doc.vertices;
  if (doc.alpha) j["alpha"] = *doc.alpha;
  if (doc.c) j["c"] = *doc.c;
  if (doc.tolerances) j["tolerances"] = to_json(*doc.tolerances);
  if (doc.seed) j["seed"] = *doc.seed;
  return j;
}

SpaceForm document_space(const InputDocument& doc) {
  if (doc.curvature < -1 || doc.curvature > 1) throw InputError("curvature must be -1, 0 or 1");
  if (doc.dim < 1) throw InputError("space.dim must be positive");
  if (doc.vertices.size() != static_cast<std::size_t>(doc.dim) + 2) {
    throw InputError("expected dim + 2 = " + std::to_string(doc.dim + 2) + " vertices, got " +
                     std::to_string(doc.vertices.size()));
  }
  const std::size_t len = doc.vertices.front().size();
  for (const auto& v : doc.vertices) {
    if (v.size() != len) throw InputError("all vertices must have the same number of coordinates");
  }
  const std::size_t minimum = static_cast<std::size_t>(doc.dim) + (doc.curvature == 0 ? 0 : 1);
  if (len < minimum) {
    throw InputError("vertices need at least " + std::to_string(minimum) + " coordinates for dim " +
                     std::to_string(doc.dim));
  }
  const int ambient = static_cast<int>(len) - (doc.curvature == 0 ? 0 : 1);
  if (ambient < 1) throw InputError("vertices need at least two coordinates in a curved space");
  return SpaceForm(doc.curvature, ambient);
}

PointList document_points(const InputDocument& doc, const SpaceForm& space) {
  PointList pts;
  for (const auto& v : doc.vertices) {
    Point p = Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
    if (!p.allFinite()) throw InputError("vertex coordinates must be finite");
    pts.push_back(p);
  }
  return to_space(pts, space);
}

QuadratureConfig quadrature_config(const Tolerances& tol) {
  if (!(tol.quad_rel > 0.0) || tol.quad_depth < 1) throw InputError("quadrature tolerance and depth must be positive");
  QuadratureConfig q;
  q.rel_tol = tol.quad_rel;
  q.max_depth = tol.quad_depth;
  return q;
}

Json vector_json(const Eigen::VectorXd& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

Json points_json(const PointList& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(vector_json(p));
  return out;
}

Json index_json(const std::vector<int>& zero_based) {
  Json out = Json::array();
  for (int i : zero_based) out.push_back(i + 1);
  return out;
}

Json report_header(const std::string& command, std::uint64_t seed, const Tolerances& tol, bool timestamp) {
  Json j;
  j["tool"] = "simplexlift";
  j["version"] = kToolVersion;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["tolerances"] = to_json(tol);
  if (timestamp) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    j["generated_at"] = buf;
  }
  return j;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size() || !std::isfinite(v)) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw InputError("empty number list");
  return out;
}

}  // namespace simplexlift::cli
