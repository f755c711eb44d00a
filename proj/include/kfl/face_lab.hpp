#pragma once

/**
 * Face certificates from exact linear programming.
 *
 * A FaceCertificate for T within S is a hyperplane containing T with every
 * other point of S on its positive side (strictly, when `strict`). The LP
 * behind it maximizes a margin t subject to
 *     a.(x_i - x_0) = 0         for i in T,
 *     a.(s_j - x_0) + t <= 0    for j outside T,
 *     -1 <= a_i <= 1,  0 <= t <= 1,
 * and the certificate is strict iff the optimum margin is positive.
 */

#include "kfl/geometry.hpp"

#include <optional>

namespace kfl {

struct FaceCertificate {
    Hyperplane hyperplane;
    bool strict = true;
    friend bool operator==(const FaceCertificate&, const FaceCertificate&) = default;
};

struct RadonWitness {
    IndexSet part_q;
    IndexSet part_r;
    /// One coefficient per input point: lambda on Q, mu on R; positive, each
    /// part summing to 1.
    std::vector<Rational> lambdas;
    Point common_point;
};

/// T must be a nonempty set of distinct valid indices (InputError otherwise).
/// For T equal to the whole set the certificate exists only when S lies in a
/// hyperplane.
std::optional<FaceCertificate> face_certificate(const PointSet& set, const IndexSet& subset, bool strict);

/// Direct substitution check of a certificate against (S, T).
bool verify_certificate(const PointSet& set, const IndexSet& subset, const FaceCertificate& cert);

/// Hyperplane with `subset` strictly on the positive side and its complement
/// strictly on the negative side, if one exists. Requires a nonempty proper
/// subset.
std::optional<Hyperplane> strict_separator(const PointSet& set, const IndexSet& subset);

/// The squared-line witness for the pair {v1, v2} under veronese(2,2): the
/// line ax + by = c through both points, expanded as (ax + by - c)^2 >= 0 in
/// lifted coordinates (x, y, x^2, xy, y^2).
FaceCertificate conic_edge_certificate(const Point& v1, const Point& v2);

/// The product-of-squares witness prod_i (x1 - v_i1)^2 >= 0 for a subset of at
/// most k source points, expressed in the coordinates of
/// neighborly_embedding(k, d). First coordinates must be distinct.
FaceCertificate embedding_product_certificate(unsigned k, std::size_t d, const std::vector<Point>& subset);

/// Largest k <= max_k such that every subset of size <= k has a strict face
/// certificate; 0 if some point is not a vertex. The whole set counts as its
/// own (improper) face.
std::size_t neighborliness_degree(const PointSet& set, std::size_t max_k, unsigned workers = 1);

struct WeakNeighborlyResult {
    bool holds = true;
    std::optional<IndexSet> failing_subset;  // lexicographically first failure
};

WeakNeighborlyResult is_weakly_k_neighborly(const PointSet& set, std::size_t k, unsigned workers = 1);

/// Radon partition of p+2 points in general linear position in R^p.
/// Q is the smaller part (ties: the part holding index 0). Throws InputError
/// for a wrong count or degenerate input.
RadonWitness radon_partition(const PointSet& set);

bool validate_radon(const PointSet& set, const RadonWitness& witness);

/// A hyperplane a.x = b, a != 0, with Q in {a.x <= b} and R in {a.x >= b}.
std::optional<Hyperplane> weak_separation(const PointSet& q, const PointSet& r);

}  // namespace kfl
