#include "kfl/facet_engine.hpp"

#include "kfl/errors.hpp"
#include "kfl/face_lab.hpp"

#include <algorithm>
#include <unordered_set>

namespace kfl {

namespace {

struct Classified {
    IndexSet indices;
    std::size_t positive = 0;
    std::size_t negative = 0;
};

std::vector<Classified> classify_all(const PointSet& set, unsigned workers, const char* context) {
    const std::size_t n = set.size(), p = set.dim();
    if (n < p + 1)
        throw InputError(std::string(context) + ": need at least " + std::to_string(p + 1) + " points in dimension " +
                         std::to_string(p));
    require_general_linear_position(set, context);
    auto subsets = combinations(n, p);
    return parallel_map<Classified>(subsets.size(), workers, [&](std::size_t i) {
        std::vector<Point> pts;
        pts.reserve(p);
        for (Index j : subsets[i]) pts.push_back(set[j]);
        auto counts = side_counts(hyperplane_through(pts), set);
        return Classified{subsets[i], counts.positive, counts.negative};
    });
}

struct IndexSetHash {
    std::size_t operator()(const IndexSet& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Index i : s) h = (h ^ (i + 0x9e3779b97f4a7c15ull)) * 1099511628211ull;
        return h;
    }
};

// Coordinates in which the points are full-dimensional: the pivot columns of
// the difference matrix give an affine isomorphism of aff(S) onto R^q.
std::optional<PointSet> full_dimensional_chart(const PointSet& set) {
    const std::size_t p = set.dim();
    std::vector<std::vector<Rational>> m;
    for (std::size_t i = 1; i < set.size(); ++i) {
        std::vector<Rational> row(p);
        for (std::size_t j = 0; j < p; ++j) row[j] = set[i][j] - set[0][j];
        m.push_back(std::move(row));
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < p && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && sgn(m[piv][c]) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < p; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    if (pivots.empty()) return std::nullopt;
    if (pivots.size() == p) return set;
    std::vector<Point> pts;
    for (const auto& x : set.points()) {
        Point y;
        for (auto c : pivots) y.push_back(x[c]);
        pts.push_back(std::move(y));
    }
    return PointSet(pivots.size(), std::move(pts));
}

}  // namespace

std::vector<OrientedFacet> enumerate_k_facets(const PointSet& set, std::size_t k, unsigned workers) {
    std::vector<OrientedFacet> out;
    for (const auto& c : classify_all(set, workers, "enumerate_k_facets")) {
        if (c.positive == k) out.push_back({c.indices, +1, k});
        if (c.negative == k) out.push_back({c.indices, -1, k});
    }
    return out;
}

KFacetProfile k_facet_profile(const PointSet& set, unsigned workers) {
    KFacetProfile profile;
    profile.n = set.size();
    profile.p = set.dim();
    auto classified = classify_all(set, workers, "k_facet_profile");
    profile.e.assign(profile.n - profile.p + 1, 0);
    for (const auto& c : classified) {
        ++profile.e[c.positive];
        ++profile.e[c.negative];
    }
    return profile;
}

KSetFamily enumerate_k_sets(const PointSet& input, std::size_t k, unsigned workers) {
    if (k < 1 || k >= input.size())
        throw InputError("enumerate_k_sets requires 1 <= k <= n-1 (k=" + std::to_string(k) +
                         ", n=" + std::to_string(input.size()) + ")");
    KSetFamily family;
    family.k = k;
    auto chart = full_dimensional_chart(input);
    if (!chart) return family;  // all points coincide: nothing separates
    const PointSet& set = *chart;
    const std::size_t n = set.size(), p = set.dim();

    auto spanning = combinations(n, p);
    auto per_subset = parallel_map<std::vector<IndexSet>>(spanning.size(), workers, [&](std::size_t s) {
        std::vector<IndexSet> candidates;
        std::vector<Point> pts;
        for (Index j : spanning[s]) pts.push_back(set[j]);
        if (!affinely_independent(pts)) return candidates;
        Hyperplane h = hyperplane_through(pts);
        IndexSet pos, neg, on;
        for (Index j = 0; j < n; ++j) {
            int side = h.side(set[j]);
            (side > 0 ? pos : side < 0 ? neg : on).push_back(j);
        }
        for (const IndexSet* strict_side : {&pos, &neg}) {
            const std::size_t have = strict_side->size();
            if (have > k || have + on.size() < k) continue;
            for_each_combination(on, k - have, [&](const IndexSet& extra) {
                IndexSet c = *strict_side;
                c.insert(c.end(), extra.begin(), extra.end());
                std::sort(c.begin(), c.end());
                candidates.push_back(std::move(c));
                return true;
            });
        }
        return candidates;
    });

    std::unordered_set<IndexSet, IndexSetHash> unique;
    for (auto& list : per_subset)
        for (auto& c : list) unique.insert(std::move(c));
    std::vector<IndexSet> candidates(unique.begin(), unique.end());
    std::sort(candidates.begin(), candidates.end());

    auto separable = parallel_map<char>(candidates.size(), workers, [&](std::size_t i) -> char {
        return strict_separator(set, candidates[i]).has_value();
    });
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (separable[i]) family.sets.push_back(std::move(candidates[i]));
    return family;
}

std::int64_t count_unoriented_halving(const PointSet& set, unsigned workers) {
    if (set.size() < set.dim() || (set.size() - set.dim()) % 2 != 0)
        throw InputError("count_unoriented_halving: n - p must be even and nonnegative (n=" +
                         std::to_string(set.size()) + ", p=" + std::to_string(set.dim()) + ")");
    auto profile = k_facet_profile(set, workers);
    return profile.e[(set.size() - set.dim()) / 2] / 2;
}

}  // namespace kfl
