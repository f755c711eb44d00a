#pragma once

/**
 * Exact rational geometry kernel: point sets, hyperplanes, orientation and
 * sidedness predicates, general-linear-position tests.
 *
 * Nothing here touches floating point. Every predicate is decided over
 * Rational, so counts built on top of it are exact.
 */

#include "kfl/combinatorics.hpp"
#include "kfl/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kfl {

using Point = std::vector<Rational>;

class PointSet {
public:
    /// Throws InputError if dim == 0, points is empty, any point has the
    /// wrong length, or labels are given with the wrong count.
    PointSet(std::size_t dim, std::vector<Point> points, std::vector<std::string> labels = {});

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const Point& operator[](Index i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }

    /// Points at the given indices, labels carried along.
    PointSet subset(const IndexSet& indices) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dim_;
    std::vector<Point> points_;
    std::vector<std::string> labels_;
};

/// The set {x : normal . x = offset}; the positive side is normal . x > offset.
struct Hyperplane {
    std::vector<Rational> normal;
    Rational offset;

    /// normal . x - offset
    Rational evaluate(std::span<const Rational> x) const;
    int side(std::span<const Rational> x) const { return sign(evaluate(x)); }

    /// Same hyperplane and orientation, scaled by a positive factor so the
    /// normal is a primitive integer vector.
    Hyperplane primitive() const;
    Hyperplane flipped() const;

    friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

struct SideCounts {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t on = 0;
    friend bool operator==(const SideCounts&, const SideCounts&) = default;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Exact determinant by fraction-carrying Gaussian elimination.
Rational determinant(std::vector<std::vector<Rational>> rows);

/// Rank of the rows (any shape).
std::size_t rank(std::vector<std::vector<Rational>> rows);

/// Sign of det[pts[i] - pts[0]]_{i=1..p}. Requires exactly p+1 points of
/// dimension p; throws InputError otherwise.
int orientation(std::span<const Point> pts);

/// True iff the points (any count) are affinely independent.
bool affinely_independent(std::span<const Point> pts);

/// Dimension of the affine hull (-1 never occurs: sets are nonempty).
std::size_t affine_dimension(std::span<const Point> pts);

/// First (dim+1)-subset in lexicographic order that is affinely dependent,
/// or all points if n <= dim and they are dependent; nullopt when the set
/// is in general linear position.
std::optional<IndexSet> find_affine_dependence(const PointSet& set);

bool is_general_linear_position(const PointSet& set);

/// Throws DegeneracyError naming the first violating subset.
void require_general_linear_position(const PointSet& set, const std::string& context);

/// Hyperplane through p affinely independent points in dimension p, normal
/// from cofactor expansion, canonically scaled: primitive integer normal
/// whose first nonzero entry is positive.
Hyperplane hyperplane_through(std::span<const Point> pts);

SideCounts side_counts(const Hyperplane& h, const PointSet& set);

std::string describe(const IndexSet& indices);

}  // namespace kfl
