#include "kfl/errors.hpp"
#include "kfl/facet_engine.hpp"
#include "kfl/genpos.hpp"
#include "kfl/projection.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace kfl;

namespace {

PointSet moment5() {
    std::vector<Rational> t{Rational(0), Rational(1), Rational(2), Rational(3), Rational(4)};
    return moment_curve_points(t, 3);
}

// s' lies on line(v, s) and on H'
void expect_on_line_and_plane(const PointSet& set, Index v, const StereographicImage& img) {
    for (std::size_t i = 0; i < img.source_indices.size(); ++i) {
        const auto& s = set[img.source_indices[i]];
        const auto& x = set[v];
        // reconstruct the full image from the chart
        Point full(set.dim());
        std::size_t c = 0;
        const auto& h = img.far_plane;
        Rational rest = h.offset;
        for (std::size_t j = 0; j < set.dim(); ++j) {
            if (j == img.dropped_coordinate) continue;
            full[j] = img.points[i][c++];
            rest -= h.normal[j] * full[j];
        }
        full[img.dropped_coordinate] = rest / h.normal[img.dropped_coordinate];
        EXPECT_EQ(h.evaluate(full), 0);
        std::vector<Rational> dir, off;
        for (std::size_t j = 0; j < set.dim(); ++j) {
            dir.push_back(s[j] - x[j]);
            off.push_back(full[j] - x[j]);
        }
        EXPECT_EQ(rank({dir, off}), 1u);
    }
}

}  // namespace

TEST(Stereographic, Tetrahedron) {
    auto tetra = oracle::integer_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    for (Index v = 0; v < 4; ++v) {
        auto img = stereographic_project(tetra, v);
        EXPECT_EQ(img.points.size(), 3u);
        EXPECT_EQ(img.points.dim(), 2u);
        EXPECT_TRUE(is_general_linear_position(img.points));
        expect_on_line_and_plane(tetra, v, img);
        EXPECT_EQ(facets_through_vertex(tetra, v, 0), 3);
        EXPECT_EQ(enumerate_k_facets(img.points, 0).size(), 3u);
    }
}

TEST(Stereographic, MomentCurve) {
    auto set = moment5();
    for (Index v = 0; v < 5; ++v) {
        auto img = stereographic_project(set, v);
        EXPECT_EQ(img.points.size(), 4u);
        EXPECT_TRUE(is_general_linear_position(img.points));
        EXPECT_TRUE(img.support.strict);
        expect_on_line_and_plane(set, v, img);
        for (std::size_t k = 0; k + 2 <= 4; ++k)
            EXPECT_EQ(facets_through_vertex(set, v, k), static_cast<std::int64_t>(enumerate_k_facets(img.points, k).size()));
    }
}

TEST(Stereographic, BijectionAndVertexSum) {
    for (std::size_t p : {3u, 4u}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const std::size_t n = p + 4;
            auto set = convex_position_set(n, p, seed);
            auto prof = k_facet_profile(set);
            for (std::size_t k = 0; k <= n - p; ++k) {
                std::int64_t sum = 0;
                for (Index v = 0; v < n; ++v) {
                    auto img = stereographic_project(set, v);
                    auto through = facets_through_vertex(set, v, k);
                    if (k <= n - 1 - (p - 1))
                        EXPECT_EQ(through, static_cast<std::int64_t>(enumerate_k_facets(img.points, k).size()));
                    sum += through;
                }
                EXPECT_EQ(sum, static_cast<std::int64_t>(p) * prof.e[k]);
            }
        }
    }
}

TEST(Stereographic, Errors) {
    auto tc = oracle::integer_set(2, {{0, 0}, {4, 0}, {0, 4}, {1, 1}});
    EXPECT_THROW(stereographic_project(tc, 3), InputError);
    EXPECT_THROW(stereographic_project(tc, 7), InputError);
    auto line = oracle::integer_set(1, {{0}, {1}, {2}});
    EXPECT_THROW(stereographic_project(line, 0), InputError);
    auto degenerate = oracle::integer_set(2, {{0, 0}, {1, 1}, {2, 2}, {3, 0}});
    EXPECT_THROW(stereographic_project(degenerate, 0), DegeneracyError);
}
