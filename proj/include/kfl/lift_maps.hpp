#pragma once

/**
 * Polynomial lifting maps R^d -> R^p.
 *
 * Each target coordinate is an integer-linear combination of monomials, so
 * plain monomial maps (Veronese, moment curve, the k-neighborly embedding)
 * and the circle map (x, y, x^2 + y^2) share one type.
 */

#include "kfl/geometry.hpp"

#include <string>
#include <vector>

namespace kfl {

using Exponents = std::vector<unsigned>;

struct Term {
    Exponents exps;
    Integer coef;
    friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial coordinate; terms are kept sorted by exponent vector with
/// like terms merged and zero coefficients removed.
using Polynomial = std::vector<Term>;

class MonomialMap {
public:
    /// Validates: every coordinate nonzero, no constant terms, coordinates
    /// pairwise distinct, exponent vectors of length source_dim.
    MonomialMap(std::size_t source_dim, std::vector<Polynomial> coords, std::string name = "custom");

    /// Pure monomial coordinates with coefficient 1.
    static MonomialMap from_exponents(std::size_t source_dim, const std::vector<Exponents>& exps, std::string name);

    std::size_t source_dim() const { return source_dim_; }
    std::size_t target_dim() const { return coords_.size(); }
    const std::vector<Polynomial>& coords() const { return coords_; }
    const std::string& name() const { return name_; }

    /// Exponent vector of each coordinate if every coordinate is a single
    /// monomial with coefficient 1; throws InputError otherwise.
    std::vector<Exponents> exponents() const;

    Point evaluate(const Point& x) const;

private:
    std::size_t source_dim_;
    std::vector<Polynomial> coords_;
    std::string name_;
};

/// All non-constant monomials of degree <= m, degree ascending, each degree
/// block in lexicographically descending exponent order:
/// veronese(2,2) = (x, y, x^2, xy, y^2).
MonomialMap veronese(std::size_t d, unsigned m);

/// All monomials of degree exactly m, lexicographically descending.
MonomialMap homogeneous_veronese(std::size_t d, unsigned m);

/// (x, y) -> (x, y, x^2 + y^2).
MonomialMap circle_map();

/// t -> (t, t^2, ..., t^d).
MonomialMap moment_curve(std::size_t d);

/// (x1, ..., xd) -> (x1, x1^2, ..., x1^{2k}, x2, ..., xd), into R^{2k+d-1}.
MonomialMap neighborly_embedding(unsigned k, std::size_t d);

/// Lifts every point, preserving order and labels. Images are never
/// deduplicated.
PointSet apply(const MonomialMap& map, const PointSet& set);

/// Keys: "veronese:d:m", "hveronese:d:m", "circle", "moment:d", "embed:k:d",
/// "identity:d", "custom:<path to map JSON>".
MonomialMap map_from_key(const std::string& key);

}  // namespace kfl
