#include "kfl/combinatorics.hpp"
#include "kfl/errors.hpp"
#include "kfl/formula_bank.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace kfl;
using namespace kfl::formulas;

TEST(Binomial, TotalOnBoundaries) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(-1, 0), 0);
    EXPECT_EQ(binomial(3, 4), 0);
    EXPECT_EQ(binomial(3, -1), 0);
    EXPECT_EQ(binomial(40, 20), 137846528820LL);
}

TEST(NeighborlyEk, PlanarIsAlwaysN) {
    for (Count n = 3; n <= 16; ++n)
        for (Count k = 0; k <= n - 2; ++k) EXPECT_EQ(neighborly_e_k(n, 2, k), n);
}

TEST(NeighborlyEk, Instances) {
    EXPECT_EQ(neighborly_e_k(5, 3, 1), 8);
    EXPECT_EQ(neighborly_e_k(9, 5, 0), 30);
    EXPECT_EQ(neighborly_e_k(5, 1, 2), 2);
    EXPECT_THROW(neighborly_e_k(5, 3, 3), InputError);
    EXPECT_THROW(neighborly_e_k(3, 3, 0), InputError);
    EXPECT_THROW(neighborly_e_k(5, 3, -1), InputError);
}

TEST(NeighborlyEk, SumAndSymmetryIdentities) {
    for (Count d = 1; d <= 6; ++d)
        for (Count n = d + 1; n <= 16; ++n) {
            Count total = 0;
            for (Count k = 0; k <= n - d; ++k) {
                total += neighborly_e_k(n, d, k);
                EXPECT_EQ(neighborly_e_k(n, d, k), neighborly_e_k(n, d, n - d - k));
                EXPECT_GE(neighborly_e_k(n, d, k), 0);
            }
            EXPECT_EQ(total, 2 * binomial(n, d)) << "n=" << n << " d=" << d;
        }
}

TEST(CircleCount, Instances) {
    EXPECT_EQ(circle_count(5, 1), 8);
    EXPECT_EQ(circle_count(5, 1) / 2, 4);
    EXPECT_EQ(circle_count(7, 0), 10);
    EXPECT_EQ(circle_count(7, 2) / 2, 9);
    EXPECT_THROW(circle_count(6, 0), InputError);
    EXPECT_THROW(circle_count(3, 0), InputError);
    EXPECT_THROW(circle_count(7, 5), InputError);
}

TEST(ConicCount, Instances) {
    EXPECT_EQ(conic_count(7, 0), 12);
    EXPECT_EQ(conic_count(9, 2), 72);
    Count total = 0;
    for (Count k = 0; k <= 2; ++k) total += conic_count(7, k);
    EXPECT_EQ(total, 42);
    EXPECT_THROW(conic_count(5, 0), InputError);
    EXPECT_THROW(conic_count(9, 5), InputError);
}

TEST(HomogeneousCount, Instances) {
    EXPECT_EQ(homogeneous_count(9, 4, 0), 30);
    EXPECT_EQ(homogeneous_count(9, 4, 2), 72);
    for (Count n = 4; n <= 12; ++n)
        for (Count k = 0; k <= n - 3; ++k) EXPECT_EQ(homogeneous_count(n, 2, k), 2 * (k + 1) * (n - k - 2));
    EXPECT_THROW(homogeneous_count(9, 3, 0), InputError);
}

TEST(Convex3dCount, Instances) {
    EXPECT_EQ(convex_3d_count(4, 0), 4);
    EXPECT_EQ(convex_3d_count(6, 1), 12);
    EXPECT_THROW(convex_3d_count(3, 0), InputError);
}

TEST(FormulaIdentities, ExactCountsAreNeighborlyCounts) {
    for (Count n = 2; n <= 16; ++n) {
        for (Count k = 0; k <= n; ++k) {
            if (n >= 6 && k <= n - 5) EXPECT_EQ(conic_count(n, k), neighborly_e_k(n, 5, k));
            if (n >= 4 && k <= n - 3) {
                EXPECT_EQ(convex_3d_count(n, k), neighborly_e_k(n, 3, k));
                if (n % 2 == 1 && n >= 5) EXPECT_EQ(circle_count(n, k), neighborly_e_k(n, 3, k));
            }
            for (Count m = 2; m <= 8; m += 2)
                if (n > m + 1 && k <= n - m - 1) EXPECT_EQ(homogeneous_count(n, m, k), neighborly_e_k(n, m + 1, k));
        }
    }
}

TEST(Bounds, ConvexBound) {
    // planar convex position: e_k = n; in R^3 the bound is (n/3)(n-1)
    auto planar_convex = [](Count n, Count) { return n; };
    EXPECT_EQ(convex_bound(9, 3, 2, planar_convex), 24);
    EXPECT_EQ(convex_bound(7, 3, 1, planar_convex), 14);
    EXPECT_EQ(convex_bound(4, 3, 0, planar_convex), 4);
    EXPECT_THROW(convex_bound(4, 1, 0, planar_convex), InputError);
}

TEST(Bounds, ConvexBoundAgainstExhaustiveGridMaxima) {
    // maxima of planar e_k over all 5-subsets of a 5x5 grid
    auto best5 = oracle::planar_grid_maxima(5, 5);
    EXPECT_EQ(best5, (std::vector<std::int64_t>{5, 7, 7, 5}));
    auto base = [&](Count n, Count k) -> Count {
        EXPECT_EQ(n, 5);
        return best5[static_cast<std::size_t>(k)];
    };
    // six moment-curve points in R^3 have e_1 = 2*2*3 = 12
    EXPECT_LE(neighborly_e_k(6, 3, 1), convex_bound(6, 3, 1, base));
    EXPECT_EQ(convex_bound(6, 3, 1, base), 14);
}

TEST(Bounds, MNeighborlyBound) {
    auto planar_convex = [](Count n, Count) { return n; };
    for (Count n = 5; n <= 10; ++n)
        for (Count k = 0; k <= 2; ++k)
            EXPECT_EQ(m_neighborly_bound(n, 3, 1, k, planar_convex), convex_bound(n, 3, k, planar_convex));
    // m = d-2 with planar base: C(n, d-2) e_k(n-d+2) / C(d, d-2)
    EXPECT_EQ(m_neighborly_bound(8, 4, 2, 1, planar_convex), ceil_to_int64(Rational(28 * 6, 6)));
    EXPECT_EQ(m_neighborly_bound(4, 3, 1, 0, [](Count, Count) { return 3; }), 4);
    EXPECT_THROW(m_neighborly_bound(8, 3, 3, 0, planar_convex), InputError);
}

TEST(Perles, Instances) {
    EXPECT_EQ(perles_bounds(2, 2), (std::pair<Count, Count>{6, 8}));
    EXPECT_EQ(perles_bounds(3, 1), (std::pair<Count, Count>{6, 12}));
    EXPECT_EQ(perles_bounds(2, 3), (std::pair<Count, Count>{8, 12}));
    EXPECT_THROW(perles_bounds(1, 3), InputError);
}

TEST(GenerallyNeighborlyDim, Instances) {
    EXPECT_EQ(generally_neighborly_dim(2, 2), 5);
    EXPECT_EQ(generally_neighborly_dim(1, 1), 2);
    EXPECT_EQ(generally_neighborly_dim(3, 4), 9);
}

TEST(Registry, LooksUpByName) {
    std::vector<Count> args{9, 2};
    EXPECT_EQ(find("conic_count").evaluate(args), 72);
    EXPECT_EQ(find("perles_upper").params.size(), 2u);
    EXPECT_THROW(find("nope"), InputError);
}
