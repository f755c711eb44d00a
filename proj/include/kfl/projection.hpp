#pragma once

/**
 * Central ("stereographic") projection of a convex-position set from one of
 * its vertices onto a far hyperplane, used to relate k-facets through a
 * vertex to k-facets one dimension down.
 */

#include "kfl/face_lab.hpp"
#include "kfl/geometry.hpp"

namespace kfl {

struct StereographicImage {
    PointSet points;               // dimension p-1, one point per s != v
    IndexSet source_indices;       // points[i] is the image of set[source_indices[i]]
    FaceCertificate support;       // H: through v, the rest strictly positive
    Hyperplane far_plane;          // H': parallel to H beyond every point
    std::size_t dropped_coordinate = 0;  // chart of H'
};

/// Requires dimension >= 2, general linear position (DegeneracyError) and v
/// a vertex of the hull (InputError). The far plane sits at
/// 1 + max signed distance from H; the chart drops the coordinate with the
/// largest |normal| entry (lowest index on ties).
StereographicImage stereographic_project(const PointSet& set, Index vertex);

/// Oriented k-facets of S whose index set contains v.
std::int64_t facets_through_vertex(const PointSet& set, Index vertex, std::size_t k, unsigned workers = 1);

}  // namespace kfl
