#include "kfl/projection.hpp"

#include "kfl/errors.hpp"
#include "kfl/facet_engine.hpp"

#include <algorithm>

namespace kfl {

StereographicImage stereographic_project(const PointSet& set, Index vertex) {
    const std::size_t p = set.dim();
    if (p < 2) throw InputError("stereographic_project needs dimension >= 2");
    if (vertex >= set.size()) throw InputError("vertex index " + std::to_string(vertex) + " out of range");
    if (set.size() < 2) throw InputError("stereographic_project needs at least two points");
    require_general_linear_position(set, "stereographic_project");

    auto support = face_certificate(set, IndexSet{vertex}, true);
    if (!support) throw InputError("point " + std::to_string(vertex) + " is not a vertex of the convex hull");
    const Hyperplane& h = support->hyperplane;
    const Point& v = set[vertex];

    Rational farthest = 0;
    for (const auto& s : set.points()) farthest = std::max(farthest, h.evaluate(s));
    const Rational gap = farthest + 1;
    Hyperplane far{h.normal, h.offset + gap};

    std::size_t drop = 0;
    for (std::size_t j = 1; j < p; ++j)
        if (abs(h.normal[j]) > abs(h.normal[drop])) drop = j;

    StereographicImage image{PointSet(1, {Point{Rational(0)}}), {}, *support, far, drop};
    std::vector<Point> projected;
    for (Index i = 0; i < set.size(); ++i) {
        if (i == vertex) continue;
        const Point& s = set[i];
        // h(v) = 0 and h(s) > 0, so v + lambda (s - v) meets H' at lambda = gap / h(s).
        Rational lambda = gap / h.evaluate(s);
        Point y;
        y.reserve(p - 1);
        for (std::size_t j = 0; j < p; ++j)
            if (j != drop) y.emplace_back(v[j] + lambda * (s[j] - v[j]));
        projected.push_back(std::move(y));
        image.source_indices.push_back(i);
    }
    std::vector<std::string> labels;
    if (set.has_labels())
        for (Index i : image.source_indices) labels.push_back(set.labels()[i]);
    image.points = PointSet(p - 1, std::move(projected), std::move(labels));
    return image;
}

std::int64_t facets_through_vertex(const PointSet& set, Index vertex, std::size_t k, unsigned workers) {
    if (vertex >= set.size()) throw InputError("vertex index " + std::to_string(vertex) + " out of range");
    std::int64_t count = 0;
    for (const auto& f : enumerate_k_facets(set, k, workers))
        if (std::binary_search(f.indices.begin(), f.indices.end(), vertex)) ++count;
    return count;
}

}  // namespace kfl
