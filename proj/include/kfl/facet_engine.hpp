#pragma once

/**
 * Exhaustive k-facet and k-set enumeration.
 *
 * k-facets are found by the direct O(C(n,p) n) sweep over p-subsets. k-sets
 * are generated from hyperplanes spanned by p affinely independent points
 * (any strict separator can be moved onto such a hyperplane without changing
 * the side of any point off it) and each candidate is confirmed by the exact
 * separation LP. Results never depend on the worker count.
 */

#include "kfl/geometry.hpp"

#include <cstdint>

namespace kfl {

struct OrientedFacet {
    IndexSet indices;  // sorted p-subset
    int sign = 1;      // +1: positive side of the canonical hyperplane, -1: negative side
    std::size_t k = 0; // points strictly on the chosen side
    friend bool operator==(const OrientedFacet&, const OrientedFacet&) = default;
};

struct KFacetProfile {
    std::size_t n = 0;
    std::size_t p = 0;
    std::vector<std::int64_t> e;  // e[0..n-p]
};

struct KSetFamily {
    std::size_t k = 0;
    std::vector<IndexSet> sets;  // sorted, each member sorted
};

/// Requires n >= p+1 (InputError) and general linear position
/// (DegeneracyError naming a violating subset).
std::vector<OrientedFacet> enumerate_k_facets(const PointSet& set, std::size_t k, unsigned workers = 1);

KFacetProfile k_facet_profile(const PointSet& set, unsigned workers = 1);

/// Works for any point set; requires 1 <= k <= n-1.
KSetFamily enumerate_k_sets(const PointSet& set, std::size_t k, unsigned workers = 1);

/// Halving k-facets at level (n-p)/2, each unordered facet counted once.
/// InputError when n-p is odd.
std::int64_t count_unoriented_halving(const PointSet& set, unsigned workers = 1);

}  // namespace kfl
