#pragma once

/**
 * Seeded point-set generators (rejection sampling on integer grids) and
 * the specialized general-position checks.
 *
 * The random stream is std::mt19937_64 with an explicit unbiased bounded
 * draw, so a (seed, parameters) pair yields the same set on every platform,
 * retries included.
 */

#include "kfl/geometry.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace kfl {

inline constexpr int kDefaultRetryBudget = 1000;

/// n integer points uniform in [-coord_bound, coord_bound]^d, redrawn
/// wholesale until in general linear position. Requires coord_bound >= n*d.
PointSet random_point_set(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t coord_bound,
                          int max_retries = kDefaultRetryBudget);

/// Same sampling scheme, accepting the first draw that satisfies `accept`.
PointSet random_point_set_where(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t coord_bound,
                                const std::function<bool(const PointSet&)>& accept, const std::string& what,
                                int max_retries = kDefaultRetryBudget);

/// General linear position of S and of its veronese(2,2) lift.
bool check_conic_general_position(const PointSet& set);

/// No two points on a common line through the origin, and the degree-m
/// homogeneous lift in general linear position. m must be even.
bool check_homogeneous_general_position(const PointSet& set, unsigned m);

/// General linear position of S and of its circle-map lift (no three
/// collinear, no four concyclic).
bool check_circle_general_position(const PointSet& set);

bool check_distinct_first_coordinate(const PointSet& set);

/// Every point is a vertex of the hull (each singleton has a strict face
/// certificate).
bool is_convex_position(const PointSet& set, unsigned workers = 1);

/// Points (t, t^2, ..., t^d) for the given parameters.
PointSet moment_curve_points(const std::vector<Rational>& params, std::size_t d);

/// n rational points on the unit sphere S^{d-1} (inverse stereographic
/// images of seeded grid points), in general linear position and certified
/// to be in convex position. Requires n > d >= 2.
PointSet convex_position_set(std::size_t n, std::size_t d, std::uint64_t seed,
                             int max_retries = kDefaultRetryBudget);

/// Default grid bound used by the CLI and verifiers: 4*n*d.
std::int64_t default_coord_bound(std::size_t n, std::size_t d);

/// Generator modes: "glp", "circle", "conic", "hom:m", "convex", "distinct-x1".
PointSet generate(const std::string& mode, std::size_t n, std::size_t d, std::uint64_t seed,
                  std::int64_t coord_bound = 0);

}  // namespace kfl
