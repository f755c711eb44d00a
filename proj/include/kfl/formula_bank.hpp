#pragma once

/**
 * Closed-form k-facet counts and bounds, as exact integer functions.
 *
 * All binomials are total: C(n, k) = 0 when n < 0, k < 0 or k > n. Domain
 * violations throw InputError.
 */

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kfl::formulas {

using Count = std::int64_t;

/// k-facets of a neighborly n-point set in general linear position in R^d.
Count neighborly_e_k(Count n, Count d, Count k);

/// Oriented circles through 3 of n = 2m+1 planar points with k points inside.
Count circle_count(Count n_points, Count k);

/// Veronese-lifted k-facets of n points in general position w.r.t. conics.
Count conic_count(Count n, Count k);

/// Homogeneous degree-m lifted k-facets of n points (n is the total count).
Count homogeneous_count(Count n, Count m, Count k);

/// k-facets of n points in general position forming a 3-polytope.
Count convex_3d_count(Count n, Count k);

/// Caller-supplied maximum e_k over (n, k) in one dimension lower.
using BaseCount = std::function<Count(Count n, Count k)>;

/// ceil((n/d) * base(n-1, k)).
Count convex_bound(Count n, Count d, Count k, const BaseCount& base);

/// ceil(C(n,m) * base(n-m, k) / C(d,m)), base taken in dimension d-m.
Count m_neighborly_bound(Count n, Count d, Count m, Count k, const BaseCount& base);

/// (k(d+1), 2k(k-1)d).
std::pair<Count, Count> perles_bounds(Count k, Count d);

/// 2k + d - 1.
Count generally_neighborly_dim(Count k, Count d);

struct CountFormula {
    std::string name;
    std::vector<std::string> params;
    std::function<Count(std::span<const Count>)> evaluate;
};

/// Every formula above that takes only integers, by CLI name.
const std::vector<CountFormula>& registry();

/// Throws InputError for an unknown name.
const CountFormula& find(const std::string& name);

}  // namespace kfl::formulas
