#include "kfl/geometry.hpp"

#include "kfl/errors.hpp"

#include <sstream>

namespace kfl {

PointSet::PointSet(std::size_t dim, std::vector<Point> points, std::vector<std::string> labels)
    : dim_(dim), points_(std::move(points)), labels_(std::move(labels)) {
    if (dim_ == 0) throw InputError("point set dimension must be positive");
    if (points_.empty()) throw InputError("point set must contain at least one point");
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i].size() != dim_)
            throw InputError("point " + std::to_string(i) + " has " + std::to_string(points_[i].size()) +
                             " coordinates, expected " + std::to_string(dim_));
    if (!labels_.empty() && labels_.size() != points_.size())
        throw InputError("label count does not match point count");
}

PointSet PointSet::subset(const IndexSet& indices) const {
    std::vector<Point> pts;
    std::vector<std::string> labels;
    pts.reserve(indices.size());
    for (Index i : indices) {
        pts.push_back(points_.at(i));
        if (has_labels()) labels.push_back(labels_[i]);
    }
    return PointSet(dim_, std::move(pts), std::move(labels));
}

Rational Hyperplane::evaluate(std::span<const Rational> x) const {
    Rational value = dot(normal, x);
    value -= offset;
    return value;
}

Hyperplane Hyperplane::primitive() const {
    Rational factor = primitive_scale_factor(normal);
    Hyperplane out;
    out.normal.reserve(normal.size());
    for (const auto& a : normal) out.normal.emplace_back(a * factor);
    out.offset = offset * factor;
    return out;
}

Hyperplane Hyperplane::flipped() const {
    Hyperplane out;
    for (const auto& a : normal) out.normal.emplace_back(-a);
    out.offset = -offset;
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw InputError("dot product of vectors with different lengths");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

namespace {

// Forward elimination in place; returns rank and accumulates the
// determinant sign/product when the matrix is square.
std::size_t eliminate(std::vector<std::vector<Rational>>& m, Rational* det) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t r = 0;
    if (det) *det = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
        if (pivot == rows) {
            if (det) *det = 0;
            continue;
        }
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            if (det) *det = -*det;
        }
        if (det) *det *= m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Rational factor = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    if (det && r < rows) *det = 0;
    return r;
}

std::vector<std::vector<Rational>> difference_rows(std::span<const Point> pts) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> row(pts[i].size());
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = pts[i][j] - pts[0][j];
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Rational determinant(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 1;
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw InputError("determinant of a non-square matrix");
    Rational det;
    eliminate(rows, &det);
    return det;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) { return eliminate(rows, nullptr); }

int orientation(std::span<const Point> pts) {
    if (pts.empty()) throw InputError("orientation needs at least one point");
    const std::size_t p = pts[0].size();
    if (pts.size() != p + 1)
        throw InputError("orientation needs " + std::to_string(p + 1) + " points in dimension " + std::to_string(p));
    for (const auto& q : pts)
        if (q.size() != p) throw InputError("orientation: dimension mismatch");
    return sgn(determinant(difference_rows(pts)));
}

std::size_t affine_dimension(std::span<const Point> pts) {
    if (pts.size() <= 1) return 0;
    return rank(difference_rows(pts));
}

bool affinely_independent(std::span<const Point> pts) {
    return pts.empty() || affine_dimension(pts) + 1 == pts.size();
}

std::optional<IndexSet> find_affine_dependence(const PointSet& set) {
    const std::size_t n = set.size();
    const std::size_t p = set.dim();
    if (n <= p) {
        if (affinely_independent(set.points())) return std::nullopt;
        IndexSet all(n);
        for (Index i = 0; i < n; ++i) all[i] = i;
        return all;
    }
    std::optional<IndexSet> found;
    IndexSet pool(n);
    for (Index i = 0; i < n; ++i) pool[i] = i;
    std::vector<Point> buffer(p + 1);
    for_each_combination(pool, p + 1, [&](const IndexSet& c) {
        for (std::size_t i = 0; i < c.size(); ++i) buffer[i] = set[c[i]];
        if (orientation(buffer) == 0) {
            found = c;
            return false;
        }
        return true;
    });
    return found;
}

bool is_general_linear_position(const PointSet& set) { return !find_affine_dependence(set).has_value(); }

void require_general_linear_position(const PointSet& set, const std::string& context) {
    if (auto bad = find_affine_dependence(set))
        throw DegeneracyError(context + ": point set is not in general linear position; affinely dependent subset " +
                              describe(*bad));
}

Hyperplane hyperplane_through(std::span<const Point> pts) {
    if (pts.empty()) throw InputError("hyperplane_through needs at least one point");
    const std::size_t p = pts[0].size();
    if (pts.size() != p)
        throw InputError("hyperplane_through needs " + std::to_string(p) + " points in dimension " + std::to_string(p));
    for (const auto& q : pts)
        if (q.size() != p) throw InputError("hyperplane_through: dimension mismatch");
    auto rows = difference_rows(pts);
    Hyperplane h;
    h.normal.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<std::vector<Rational>> minor;
        minor.reserve(rows.size());
        for (const auto& r : rows) {
            std::vector<Rational> m;
            m.reserve(p - 1);
            for (std::size_t c = 0; c < p; ++c)
                if (c != j) m.push_back(r[c]);
            minor.push_back(std::move(m));
        }
        Rational cof = determinant(std::move(minor));
        h.normal[j] = (j % 2 == 0) ? cof : Rational(-cof);
    }
    bool nonzero = false;
    for (const auto& a : h.normal) nonzero = nonzero || sgn(a) != 0;
    if (!nonzero) throw DegeneracyError("hyperplane_through: points are affinely dependent");
    h.offset = dot(h.normal, pts[0]);
    h = h.primitive();
    for (const auto& a : h.normal) {
        if (sgn(a) == 0) continue;
        if (sgn(a) < 0) h = h.flipped();
        break;
    }
    return h;
}

SideCounts side_counts(const Hyperplane& h, const PointSet& set) {
    if (h.normal.size() != set.dim()) throw InputError("side_counts: dimension mismatch");
    SideCounts counts;
    for (const auto& x : set.points()) {
        int s = h.side(x);
        if (s > 0)
            ++counts.positive;
        else if (s < 0)
            ++counts.negative;
        else
            ++counts.on;
    }
    return counts;
}

std::string describe(const IndexSet& indices) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << '}';
    return os.str();
}

}  // namespace kfl
