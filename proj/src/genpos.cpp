#include "kfl/genpos.hpp"

#include "kfl/errors.hpp"
#include "kfl/face_lab.hpp"
#include "kfl/lift_maps.hpp"

#include <limits>
#include <random>
#include <set>

namespace kfl {

namespace {

class GridSampler {
public:
    explicit GridSampler(std::uint64_t seed) : engine_(seed) {}

    // Uniform integer in [-bound, bound] by rejection on the raw 64-bit stream.
    std::int64_t draw(std::int64_t bound) {
        const std::uint64_t range = static_cast<std::uint64_t>(2 * bound + 1);
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return static_cast<std::int64_t>(x % range) - bound;
    }

private:
    std::mt19937_64 engine_;
};

PointSet draw_integer_set(GridSampler& rng, std::size_t n, std::size_t d, std::int64_t bound) {
    std::vector<Point> pts(n, Point(d));
    for (auto& pt : pts)
        for (auto& c : pt) c = Rational(static_cast<long>(rng.draw(bound)));
    return PointSet(d, std::move(pts));
}

bool same_origin_line(const Point& a, const Point& b) { return a[0] * b[1] == a[1] * b[0]; }

}  // namespace

std::int64_t default_coord_bound(std::size_t n, std::size_t d) { return static_cast<std::int64_t>(4 * n * d); }

PointSet random_point_set_where(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t coord_bound,
                                const std::function<bool(const PointSet&)>& accept, const std::string& what,
                                int max_retries) {
    if (n < 1 || d < 1) throw InputError("random point sets need n >= 1 and d >= 1");
    if (coord_bound < static_cast<std::int64_t>(n * d))
        throw InputError("coord_bound must be at least n*d = " + std::to_string(n * d));
    GridSampler rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        PointSet candidate = draw_integer_set(rng, n, d, coord_bound);
        if (accept(candidate)) return candidate;
    }
    throw GenerationError("no " + what + " set of " + std::to_string(n) + " points in dimension " + std::to_string(d) +
                          " found within " + std::to_string(max_retries) + " draws (seed " + std::to_string(seed) +
                          ")");
}

PointSet random_point_set(std::size_t n, std::size_t d, std::uint64_t seed, std::int64_t coord_bound,
                          int max_retries) {
    return random_point_set_where(n, d, seed, coord_bound, is_general_linear_position, "general-linear-position",
                                  max_retries);
}

bool check_conic_general_position(const PointSet& set) {
    if (set.dim() != 2) throw InputError("conic general position is defined for planar sets");
    return is_general_linear_position(set) && is_general_linear_position(apply(veronese(2, 2), set));
}

bool check_homogeneous_general_position(const PointSet& set, unsigned m) {
    if (set.dim() != 2) throw InputError("homogeneous general position is defined for planar sets");
    if (m < 2 || m % 2 != 0) throw InputError("homogeneous general position requires an even degree m >= 2");
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (same_origin_line(set[i], set[j])) return false;
    if (set.size() == 1 && sgn(set[0][0]) == 0 && sgn(set[0][1]) == 0) return false;
    return is_general_linear_position(apply(homogeneous_veronese(2, m), set));
}

bool check_circle_general_position(const PointSet& set) {
    if (set.dim() != 2) throw InputError("circle general position is defined for planar sets");
    return is_general_linear_position(set) && is_general_linear_position(apply(circle_map(), set));
}

bool check_distinct_first_coordinate(const PointSet& set) {
    std::set<Rational> seen;
    for (const auto& x : set.points())
        if (!seen.insert(x[0]).second) return false;
    return true;
}

bool is_convex_position(const PointSet& set, unsigned workers) {
    if (set.size() == 1) return true;
    auto ok = parallel_map<char>(set.size(), workers, [&](std::size_t i) -> char {
        return face_certificate(set, IndexSet{i}, true).has_value();
    });
    for (char c : ok)
        if (!c) return false;
    return true;
}

PointSet moment_curve_points(const std::vector<Rational>& params, std::size_t d) {
    if (params.empty()) throw InputError("moment curve needs at least one parameter");
    std::vector<Point> pts;
    for (const auto& t : params) pts.push_back(Point{t});
    return apply(moment_curve(d), PointSet(1, std::move(pts)));
}

PointSet convex_position_set(std::size_t n, std::size_t d, std::uint64_t seed, int max_retries) {
    if (d < 2 || n <= d) throw InputError("convex_position_set requires n > d >= 2");
    const std::int64_t bound = static_cast<std::int64_t>(4 * n);
    const Rational scale(static_cast<long>(bound));
    GridSampler rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::set<std::vector<std::int64_t>> used;
        std::vector<Point> pts;
        while (pts.size() < n) {
            std::vector<std::int64_t> grid(d - 1);
            for (auto& g : grid) g = rng.draw(bound);
            if (!used.insert(grid).second) continue;
            // inverse stereographic projection from the north pole
            Rational norm2 = 0;
            std::vector<Rational> u;
            for (auto g : grid) {
                u.emplace_back(Rational(static_cast<long>(g)) / scale);
                norm2 += u.back() * u.back();
            }
            Rational denom = norm2 + 1;
            Point x;
            for (const auto& ui : u) x.emplace_back(2 * ui / denom);
            x.emplace_back((norm2 - 1) / denom);
            pts.push_back(std::move(x));
        }
        PointSet candidate(d, std::move(pts));
        if (!is_general_linear_position(candidate)) continue;
        if (!is_convex_position(candidate))
            throw GenerationError("convex_position_set: certification failed for seed " + std::to_string(seed));
        return candidate;
    }
    throw GenerationError("convex_position_set: no general-position draw within " + std::to_string(max_retries) +
                          " attempts (seed " + std::to_string(seed) + ")");
}

PointSet generate(const std::string& mode, std::size_t n, std::size_t d, std::uint64_t seed,
                  std::int64_t coord_bound) {
    if (coord_bound <= 0) coord_bound = default_coord_bound(n, d);
    if (mode == "glp") return random_point_set(n, d, seed, coord_bound);
    if (mode == "convex") return convex_position_set(n, d, seed);
    if (mode == "distinct-x1")
        return random_point_set_where(
            n, d, seed, coord_bound,
            [](const PointSet& s) { return check_distinct_first_coordinate(s) && is_general_linear_position(s); },
            "distinct-first-coordinate");
    if (mode == "circle" || mode == "conic" || mode.rfind("hom:", 0) == 0) {
        if (d != 2) throw InputError("mode '" + mode + "' generates planar sets; use --d 2");
        if (mode == "circle") return random_point_set_where(n, d, seed, coord_bound, check_circle_general_position, "circle-generic");
        if (mode == "conic") return random_point_set_where(n, d, seed, coord_bound, check_conic_general_position, "conic-generic");
        unsigned m = 0;
        try {
            m = static_cast<unsigned>(std::stoul(mode.substr(4)));
        } catch (const std::exception&) {
            throw InputError("invalid degree in mode '" + mode + "'");
        }
        if (m < 2 || m % 2 != 0) throw InputError("mode 'hom:m' requires an even degree m >= 2");
        return random_point_set_where(
            n, d, seed, coord_bound, [m](const PointSet& s) { return check_homogeneous_general_position(s, m); },
            "homogeneous-generic");
    }
    throw InputError("unknown generator mode '" + mode + "'");
}

}  // namespace kfl
