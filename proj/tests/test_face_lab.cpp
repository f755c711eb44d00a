#include "kfl/errors.hpp"
#include "kfl/face_lab.hpp"
#include "kfl/genpos.hpp"
#include "kfl/lift_maps.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace kfl;

namespace {

PointSet unit_square() { return oracle::integer_set(2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }
PointSet triangle_center() { return oracle::integer_set(2, {{0, 0}, {4, 0}, {0, 4}, {1, 1}}); }

Point pt(std::initializer_list<long> c) {
    Point p;
    for (long v : c) p.emplace_back(v);
    return p;
}

std::vector<Rational> r(std::initializer_list<long> c) { return pt(c); }

}  // namespace

TEST(FaceCertificate, SquareEdgesAndDiagonals) {
    auto sq = unit_square();
    auto edge = face_certificate(sq, {0, 1}, true);
    ASSERT_TRUE(edge);
    EXPECT_EQ(edge->hyperplane.normal, r({0, 1}));
    EXPECT_EQ(edge->hyperplane.offset, Rational(0));
    EXPECT_TRUE(verify_certificate(sq, {0, 1}, *edge));
    EXPECT_FALSE(face_certificate(sq, {0, 2}, true));
    EXPECT_FALSE(face_certificate(sq, {0, 2}, false));
}

TEST(FaceCertificate, StrictImpliesNonStrict) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto set = random_point_set(7, 3, seed, 21);
        for (const auto& t : combinations(7, 2)) {
            auto strict = face_certificate(set, t, true);
            auto weak = face_certificate(set, t, false);
            if (strict) {
                ASSERT_TRUE(weak);
                EXPECT_TRUE(verify_certificate(set, t, *strict));
            }
            if (weak) EXPECT_TRUE(verify_certificate(set, t, *weak));
        }
    }
}

TEST(FaceCertificate, NonStrictOnly) {
    // midpoint of an edge lies on a supporting line but is not a vertex
    auto set = oracle::integer_set(2, {{0, 0}, {2, 0}, {1, 0}, {0, 2}});
    EXPECT_FALSE(face_certificate(set, {2}, true));
    auto weak = face_certificate(set, {2}, false);
    ASSERT_TRUE(weak);
    EXPECT_FALSE(weak->strict);
    EXPECT_TRUE(verify_certificate(set, {2}, *weak));
}

TEST(FaceCertificate, WholeSet) {
    EXPECT_FALSE(face_certificate(unit_square(), {0, 1, 2, 3}, true));
    auto flat = oracle::integer_set(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    auto cert = face_certificate(flat, {0, 1, 2}, true);
    ASSERT_TRUE(cert);
    EXPECT_TRUE(verify_certificate(flat, {0, 1, 2}, *cert));
}

TEST(FaceCertificate, BadSubsets) {
    auto sq = unit_square();
    EXPECT_THROW(face_certificate(sq, {}, true), InputError);
    EXPECT_THROW(face_certificate(sq, {4}, true), InputError);
    EXPECT_THROW(face_certificate(sq, {1, 1}, true), InputError);
}

TEST(FaceCertificate, VerifierRejectsWrongCertificates) {
    auto sq = unit_square();
    FaceCertificate wrong{Hyperplane{r({0, -1}), Rational(0)}, true};
    EXPECT_FALSE(verify_certificate(sq, {0, 1}, wrong));
    FaceCertificate zero{Hyperplane{r({0, 0}), Rational(0)}, false};
    EXPECT_FALSE(verify_certificate(sq, {0, 1}, zero));
}

TEST(StrictSeparator, Basics) {
    auto tc = triangle_center();
    auto h = strict_separator(tc, {0});
    ASSERT_TRUE(h);
    EXPECT_GT(h->side(tc[0]), 0);
    for (Index i : {1, 2, 3}) EXPECT_LT(h->side(tc[i]), 0);
    EXPECT_FALSE(strict_separator(tc, {3}));
    EXPECT_THROW(strict_separator(tc, {0, 1, 2, 3}), InputError);
}

TEST(ConicEdgeCertificate, AxisLines) {
    auto c = conic_edge_certificate(pt({0, 0}), pt({1, 0}));
    EXPECT_EQ(c.hyperplane.normal, r({0, 0, 0, 0, 1}));  // y^2 = 0
    EXPECT_EQ(c.hyperplane.offset, Rational(0));
    auto v = conic_edge_certificate(pt({0, 0}), pt({0, 1}));
    EXPECT_EQ(v.hyperplane.normal, r({0, 0, 1, 0, 0}));  // x^2 = 0
    // every lifted point with y != 0 is strictly positive
    auto lift = veronese(2, 2);
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y) {
            int s = c.hyperplane.side(lift.evaluate(pt({x, y})));
            EXPECT_EQ(s, y == 0 ? 0 : 1);
        }
    EXPECT_THROW(conic_edge_certificate(pt({1, 1}), pt({1, 1})), InputError);
}

TEST(ConicEdgeCertificate, AgreesWithLp) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto set = random_point_set(7, 2, seed, 28);
        auto lifted = apply(veronese(2, 2), set);
        for (const auto& t : combinations(7, 2)) {
            auto constructive = conic_edge_certificate(set[t[0]], set[t[1]]);
            EXPECT_TRUE(verify_certificate(lifted, t, constructive));
            EXPECT_TRUE(face_certificate(lifted, t, true));
        }
    }
}

TEST(EmbeddingCertificate, ProductOfSquares) {
    const unsigned k = 2;
    auto set = generate("distinct-x1", 6, 3, 4);
    auto lifted = apply(neighborly_embedding(k, 3), set);
    for (std::size_t size = 1; size <= k; ++size)
        for (const auto& t : combinations(6, size)) {
            std::vector<Point> pts;
            for (auto i : t) pts.push_back(set[i]);
            EXPECT_TRUE(verify_certificate(lifted, t, embedding_product_certificate(k, 3, pts)));
        }
    // (x - 1)^2 (x - 2)^2 = x^4 - 6x^3 + 13x^2 - 12x + 4
    auto c = embedding_product_certificate(2, 1, {pt({1}), pt({2})});
    EXPECT_EQ(c.hyperplane.normal, r({-12, 13, -6, 1}));
    EXPECT_EQ(c.hyperplane.offset, Rational(-4));
    EXPECT_THROW(embedding_product_certificate(2, 1, {pt({1}), pt({1})}), DegeneracyError);
    EXPECT_THROW(embedding_product_certificate(1, 1, {pt({1}), pt({2})}), InputError);
}

TEST(NeighborlinessDegree, Examples) {
    std::vector<Rational> t{Rational(0), Rational(1), Rational(2), Rational(3), Rational(4)};
    EXPECT_EQ(neighborliness_degree(moment_curve_points(t, 4), 2), 2u);
    EXPECT_EQ(neighborliness_degree(unit_square(), 2), 1u);
    EXPECT_EQ(neighborliness_degree(triangle_center(), 2), 0u);
}

TEST(NeighborlinessDegree, VeroneseDegreeFour) {
    auto set = generate("conic", 8, 2, 2);
    EXPECT_EQ(neighborliness_degree(apply(veronese(2, 4), set), 5), 5u);
}

TEST(NeighborlinessDegree, HomogeneousLift) {
    for (unsigned m : {2u, 4u}) {
        auto set = generate("hom:" + std::to_string(m), 8, 2, m);
        EXPECT_EQ(neighborliness_degree(apply(homogeneous_veronese(2, m), set), m / 2), m / 2);
    }
}

TEST(WeakNeighborly, Examples) {
    // 4 points in R^3: simplex, every pair is an edge
    auto simplex = random_point_set(4, 3, 1, 12);
    EXPECT_TRUE(is_weakly_k_neighborly(simplex, 2).holds);
    for (std::size_t k = 1; k <= 3; ++k) {
        auto set = random_point_set(2 * k + 1, 2 * k - 1, 7 + k, default_coord_bound(2 * k + 1, 2 * k - 1));
        auto res = is_weakly_k_neighborly(set, k);
        EXPECT_FALSE(res.holds) << k;
        ASSERT_TRUE(res.failing_subset);
        EXPECT_EQ(res.failing_subset->size(), k);
    }
    auto tc = is_weakly_k_neighborly(triangle_center(), 1);
    EXPECT_FALSE(tc.holds);
    EXPECT_EQ(*tc.failing_subset, IndexSet{3});
    EXPECT_THROW(is_weakly_k_neighborly(triangle_center(), 5), InputError);
}

TEST(Radon, Square) {
    auto sq = unit_square();
    auto w = radon_partition(sq);
    EXPECT_EQ(w.part_q, (IndexSet{0, 2}));
    EXPECT_EQ(w.part_r, (IndexSet{1, 3}));
    EXPECT_EQ(w.common_point, (Point{Rational(1, 2), Rational(1, 2)}));
    EXPECT_TRUE(validate_radon(sq, w));
}

TEST(Radon, TriangleWithInteriorPoint) {
    auto tc = triangle_center();
    auto w = radon_partition(tc);
    EXPECT_EQ(w.part_q, IndexSet{3});
    EXPECT_EQ(w.part_r, (IndexSet{0, 1, 2}));
    EXPECT_EQ(w.common_point, pt({1, 1}));
    EXPECT_TRUE(validate_radon(tc, w));
}

TEST(Radon, RandomSetsValidateAndResistSeparation) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::size_t p = 1 + seed % 4;
        auto set = random_point_set(p + 2, p, seed, default_coord_bound(p + 2, p));
        auto w = radon_partition(set);
        EXPECT_TRUE(validate_radon(set, w));
        // recompute both combinations from scratch
        for (const IndexSet* part : {&w.part_q, &w.part_r}) {
            Point combo(p, Rational(0));
            for (auto i : *part)
                for (std::size_t j = 0; j < p; ++j) combo[j] += w.lambdas[i] * set[i][j];
            EXPECT_EQ(combo, w.common_point);
        }
        EXPECT_FALSE(weak_separation(set.subset(w.part_q), set.subset(w.part_r)));
    }
}

TEST(Radon, Errors) {
    EXPECT_THROW(radon_partition(triangle_center().subset({0, 1, 2})), InputError);
    EXPECT_THROW(radon_partition(oracle::integer_set(2, {{0, 0}, {1, 1}, {2, 2}, {0, 1}})), InputError);
}

TEST(Radon, ValidatorCatchesTampering) {
    auto sq = unit_square();
    auto w = radon_partition(sq);
    auto bad = w;
    bad.lambdas[0] += 1;
    EXPECT_FALSE(validate_radon(sq, bad));
    bad = w;
    bad.part_r.push_back(0);
    EXPECT_FALSE(validate_radon(sq, bad));
}

TEST(WeakSeparation, Examples) {
    auto q = oracle::integer_set(2, {{0, 0}});
    auto rr = oracle::integer_set(2, {{1, 0}});
    auto h = weak_separation(q, rr);
    ASSERT_TRUE(h);
    EXPECT_LE(sgn(h->evaluate(q[0])), 0);
    EXPECT_GE(sgn(h->evaluate(rr[0])), 0);
    auto origin = weak_separation(q, q);
    ASSERT_TRUE(origin);
    EXPECT_EQ(origin->normal, r({1, 0}));
    EXPECT_EQ(origin->offset, Rational(0));
    auto diag1 = oracle::integer_set(2, {{0, 0}, {1, 1}});
    auto diag2 = oracle::integer_set(2, {{1, 0}, {0, 1}});
    EXPECT_FALSE(weak_separation(diag1, diag2));
    EXPECT_THROW(weak_separation(q, oracle::integer_set(3, {{0, 0, 0}})), InputError);
}
