#pragma once

#include "simplexlift/spaces.hpp"

namespace fixtures {

using simplexlift::Point;
using simplexlift::PointList;

inline PointList plane(std::initializer_list<std::pair<double, double>> xy) {
  PointList out;
  for (auto [x, y] : xy) out.push_back(Point{{x, y}});
  return out;
}

inline PointList square() { return plane({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
inline PointList triangle_centroid() { return plane({{0, 0}, {1, 0}, {0, 1}, {1.0 / 3, 1.0 / 3}}); }
/// Triangle plus its orthocenter (1, 1).
inline PointList orthocenter() { return plane({{0, 0}, {4, 0}, {1, 3}, {1, 1}}); }

inline Point unit(Point v) { return v / v.norm(); }

}  // namespace fixtures
