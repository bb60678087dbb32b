#pragma once

// Seeded generators for test and verification configurations.
//
// Every generator takes the RNG by reference; callers derive one stream per
// experiment with make_rng(seed, stream) so that results do not depend on
// evaluation order.

#include <cstdint>
#include <random>

#include "simplexlift/spaces.hpp"
#include "simplexlift/stress.hpp"

namespace simplexlift {

using Rng = std::mt19937_64;

Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

Point random_gaussian(int dim, Rng& rng);
Point random_unit_vector(int dim, Rng& rng);

/// rows x cols with orthonormal columns (rows >= cols).
Eigen::MatrixXd random_orthonormal(int rows, int cols, Rng& rng);

/// A point of the space: Gaussian in flat space, uniform on the sphere,
/// a Gaussian spatial part lifted to the hyperboloid.
Point random_space_point(const SpaceForm& space, Rng& rng, double spread = 1.0);

enum class CaseFilter { Any, CaseZero, ExcludeCaseZero };

struct SampleQuality {
  /// Lower bound on min |alpha_i| / max |alpha_i|.
  double min_alpha_ratio = 0.05;
  /// Lower bound on every facet's shape ratio (affine in flat space, linear otherwise).
  double min_facet_shape = 0.05;
  int max_attempts = 10000;
};

struct DegenerateSample {
  PointList vertices;
  OneStress alpha;
  /// Candidates rejected before this one.
  int rejected = 0;
};

/// n+2 points confined to a random totally geodesic M^n inside `space`
/// (space.dim() >= n), with a well-conditioned 1-stress.
DegenerateSample random_degenerate(const SpaceForm& space, int n, Rng& rng, CaseFilter filter = CaseFilter::Any,
                                   const SampleQuality& quality = {});

/// k+1 points in `space` spanning a non-degenerate k-simplex with facet shape
/// above `min_shape`.
PointList random_simplex(const SpaceForm& space, int k, Rng& rng, double min_shape = 0.05);

/// Embeds points of M^n (ambient length n or n+1) into M^d by a random
/// isometry that is generic for the flat and spherical cases and a rotation
/// composed with a boost on the hyperboloid.
PointList random_embedding(const PointList& points, const SpaceForm& from, const SpaceForm& to, Rng& rng);

}  // namespace simplexlift
