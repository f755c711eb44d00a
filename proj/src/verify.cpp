#include "kfl/verify.hpp"

#include "kfl/errors.hpp"
#include "kfl/face_lab.hpp"
#include "kfl/facet_engine.hpp"
#include "kfl/formula_bank.hpp"
#include "kfl/genpos.hpp"
#include "kfl/lift_maps.hpp"
#include "kfl/projection.hpp"

#include <functional>

namespace kfl {

namespace {

using formulas::Count;

struct Context {
    VerifyReport& report;
    unsigned workers;

    std::int64_t param(const std::string& name, std::int64_t fallback) {
        auto [it, inserted] = report.params.emplace(name, fallback);
        return it->second;
    }
};

void require_known(const VerifyParams& given, std::initializer_list<const char*> allowed, const std::string& theorem) {
    for (const auto& [name, value] : given) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || name == a;
        if (!ok) throw InputError("theorem '" + theorem + "' does not take parameter '" + name + "'");
    }
}

std::size_t positive(std::int64_t v, const char* name) {
    if (v < 1) throw InputError(std::string("parameter ") + name + " must be positive");
    return static_cast<std::size_t>(v);
}

Json expected_profile(std::size_t n, std::size_t p, const std::function<Count(Count)>& f) {
    Json e = Json::array();
    for (std::size_t k = 0; k + p <= n; ++k) e.push_back(f(static_cast<Count>(k)));
    return e;
}

void verify_lifted_profile(Context& ctx, const PointSet& source, const MonomialMap& map,
                           const std::function<Count(Count)>& formula, bool with_halving) {
    auto lifted = apply(map, source);
    auto profile = k_facet_profile(lifted, ctx.workers);
    auto& r = ctx.report;
    r.expected["profile"] = expected_profile(lifted.size(), lifted.dim(), formula);
    r.measured["profile"] = profile.e;
    r.pass = r.expected["profile"] == r.measured["profile"];
    if (with_halving && (lifted.size() - lifted.dim()) % 2 == 0) {
        auto m = static_cast<std::int64_t>((source.size() - 1) / 2);
        r.expected["halving_unoriented"] = m * m;
        r.measured["halving_unoriented"] = count_unoriented_halving(lifted, ctx.workers);
        r.pass = r.pass && r.expected["halving_unoriented"] == r.measured["halving_unoriented"];
    }
}

void verify_circles(Context& ctx) {
    auto n = positive(ctx.param("n", 7), "n");
    formulas::circle_count(static_cast<Count>(n), 0);  // domain check
    auto set = generate("circle", n, 2, ctx.report.seed);
    ctx.report.instance = set;
    verify_lifted_profile(ctx, set, circle_map(), [n](Count k) { return formulas::circle_count(Count(n), k); }, true);
}

void verify_conics(Context& ctx) {
    auto n = positive(ctx.param("n", 8), "n");
    formulas::conic_count(static_cast<Count>(n), 0);
    auto set = generate("conic", n, 2, ctx.report.seed);
    ctx.report.instance = set;
    verify_lifted_profile(ctx, set, veronese(2, 2), [n](Count k) { return formulas::conic_count(Count(n), k); }, false);
}

void verify_homogeneous(Context& ctx) {
    auto n = positive(ctx.param("n", 7), "n");
    auto m = positive(ctx.param("m", 2), "m");
    formulas::homogeneous_count(Count(n), Count(m), 0);
    auto set = generate("hom:" + std::to_string(m), n, 2, ctx.report.seed);
    ctx.report.instance = set;
    verify_lifted_profile(ctx, set, homogeneous_veronese(2, static_cast<unsigned>(m)),
                          [n, m](Count k) { return formulas::homogeneous_count(Count(n), Count(m), k); }, false);
}

void verify_veronese_neighborly(Context& ctx) {
    auto n = positive(ctx.param("n", 7), "n");
    auto m = positive(ctx.param("m", 2), "m");
    if (m % 2 != 0) throw InputError("veronese-neighborly requires an even degree m");
    const unsigned half = static_cast<unsigned>(m / 2);
    auto set = random_point_set_where(
        n, 2, ctx.report.seed, default_coord_bound(n, 2),
        [half](const PointSet& s) {
            return is_general_linear_position(s) && is_general_linear_position(apply(veronese(2, half), s));
        },
        "veronese-generic");
    ctx.report.instance = set;
    auto lifted = apply(veronese(2, static_cast<unsigned>(m)), set);
    const auto degree = static_cast<std::size_t>(binomial(half + 2, half) - 1);
    auto measured = neighborliness_degree(lifted, degree, ctx.workers);
    auto& r = ctx.report;
    r.expected["neighborliness_degree"] = degree;
    r.measured["neighborliness_degree"] = measured;
    r.pass = measured >= degree;
    if (m == 2) {
        // every pair: the squared-line witness verifies and the LP agrees
        std::size_t agreeing = 0, pairs = 0;
        for (const auto& pair : combinations(n, 2)) {
            ++pairs;
            auto constructive = conic_edge_certificate(set[pair[0]], set[pair[1]]);
            bool lp = face_certificate(lifted, pair, true).has_value();
            if (verify_certificate(lifted, pair, constructive) && lp) ++agreeing;
        }
        r.expected["edge_certificates"] = pairs;
        r.measured["edge_certificates"] = agreeing;
        r.pass = r.pass && agreeing == pairs;
    }
}

void verify_embedding(Context& ctx) {
    auto k = positive(ctx.param("k", 2), "k");
    auto d = positive(ctx.param("d", 2), "d");
    auto n = positive(ctx.param("n", 8), "n");
    auto set = generate("distinct-x1", n, d, ctx.report.seed);
    ctx.report.instance = set;
    auto map = neighborly_embedding(static_cast<unsigned>(k), d);
    auto lifted = apply(map, set);
    auto measured = neighborliness_degree(lifted, k, ctx.workers);
    std::size_t verified = 0, total = 0;
    for (const auto& subset : combinations(n, std::min(k, n))) {
        ++total;
        std::vector<Point> pts;
        for (auto i : subset) pts.push_back(set[i]);
        if (verify_certificate(lifted, subset, embedding_product_certificate(static_cast<unsigned>(k), d, pts)))
            ++verified;
    }
    auto& r = ctx.report;
    r.expected["neighborliness_degree"] = k;
    r.measured["neighborliness_degree"] = measured;
    r.expected["product_certificates"] = total;
    r.measured["product_certificates"] = verified;
    r.pass = measured >= k && verified == total;
}

void verify_projection(Context& ctx) {
    auto n = positive(ctx.param("n", 7), "n");
    auto p = positive(ctx.param("p", 3), "p");
    auto set = convex_position_set(n, p, ctx.report.seed);
    ctx.report.instance = set;
    auto profile = k_facet_profile(set, ctx.workers);
    std::vector<std::vector<std::int64_t>> through(n), projected(n);
    bool bijection = true;
    for (Index v = 0; v < n; ++v) {
        auto image = stereographic_project(set, v);
        auto image_profile = k_facet_profile(image.points, ctx.workers);
        for (std::size_t k = 0; k <= n - p; ++k) {
            through[v].push_back(facets_through_vertex(set, v, k, ctx.workers));
            projected[v].push_back(image_profile.e[k]);
        }
        bijection = bijection && through[v] == projected[v];
    }
    Json sums = Json::array(), scaled = Json::array();
    bool sums_ok = true;
    for (std::size_t k = 0; k <= n - p; ++k) {
        std::int64_t total = 0;
        for (Index v = 0; v < n; ++v) total += through[v][k];
        sums.push_back(total);
        scaled.push_back(static_cast<std::int64_t>(p) * profile.e[k]);
        sums_ok = sums_ok && total == static_cast<std::int64_t>(p) * profile.e[k];
    }
    auto& r = ctx.report;
    r.expected["facets_through_vertex"] = projected;
    r.measured["facets_through_vertex"] = through;
    r.expected["vertex_sum"] = scaled;
    r.measured["vertex_sum"] = sums;
    r.pass = bijection && sums_ok;
}

void verify_radon(Context& ctx) {
    auto p = positive(ctx.param("p", 3), "p");
    auto set = random_point_set(p + 2, p, ctx.report.seed, default_coord_bound(p + 2, p));
    ctx.report.instance = set;
    auto witness = radon_partition(set);
    bool valid = validate_radon(set, witness);
    bool separated = weak_separation(set.subset(witness.part_q), set.subset(witness.part_r)).has_value();
    auto& r = ctx.report;
    r.expected["witness_valid"] = true;
    r.expected["weakly_separable"] = false;
    r.measured["witness_valid"] = valid;
    r.measured["weakly_separable"] = separated;
    r.measured["witness"] = radon_to_json(witness);
    r.pass = valid && !separated;
}

void verify_weakly(Context& ctx) {
    auto k = positive(ctx.param("k", 2), "k");
    const std::size_t n = 2 * k + 1, p = 2 * k - 1;
    auto set = random_point_set(n, p, ctx.report.seed, default_coord_bound(n, p));
    ctx.report.instance = set;
    auto result = is_weakly_k_neighborly(set, k, ctx.workers);
    auto& r = ctx.report;
    r.expected["weakly_k_neighborly"] = false;
    r.measured["weakly_k_neighborly"] = result.holds;
    if (result.failing_subset) r.measured["failing_subset"] = *result.failing_subset;
    r.pass = !result.holds;
}

}  // namespace

Json VerifyReport::to_json() const {
    Json doc;
    doc["theorem"] = theorem;
    doc["params"] = Json(params);
    doc["seed"] = seed;
    doc["expected"] = expected;
    doc["measured"] = measured;
    doc["pass"] = pass;
    if (!pass && instance) doc["instance"] = point_set_to_json(*instance);
    return doc;
}

const std::vector<std::string>& verify_theorems() {
    static const std::vector<std::string> names{"circles",   "conics",     "homogeneous", "veronese-neighborly",
                                                "embedding", "projection", "radon",       "weakly"};
    return names;
}

VerifyReport run_verify(const std::string& theorem, const VerifyParams& params, std::uint64_t seed,
                        unsigned workers) {
    VerifyReport report;
    report.theorem = theorem;
    report.params = params;
    report.seed = seed;
    report.expected = Json::object();
    report.measured = Json::object();
    Context ctx{report, workers};
    if (theorem == "circles") {
        require_known(params, {"n"}, theorem);
        verify_circles(ctx);
    } else if (theorem == "conics") {
        require_known(params, {"n"}, theorem);
        verify_conics(ctx);
    } else if (theorem == "homogeneous") {
        require_known(params, {"n", "m"}, theorem);
        verify_homogeneous(ctx);
    } else if (theorem == "veronese-neighborly") {
        require_known(params, {"n", "m"}, theorem);
        verify_veronese_neighborly(ctx);
    } else if (theorem == "embedding") {
        require_known(params, {"k", "d", "n"}, theorem);
        verify_embedding(ctx);
    } else if (theorem == "projection") {
        require_known(params, {"n", "p"}, theorem);
        verify_projection(ctx);
    } else if (theorem == "radon") {
        require_known(params, {"p"}, theorem);
        verify_radon(ctx);
    } else if (theorem == "weakly") {
        require_known(params, {"k"}, theorem);
        verify_weakly(ctx);
    } else {
        throw InputError("unknown theorem '" + theorem + "'");
    }
    return report;
}

Json run_count(const PointSet& input, const std::string& map_key, CountMode mode, std::optional<std::size_t> k,
               unsigned workers) {
    PointSet set = map_key.empty() ? input : apply(map_from_key(map_key), input);
    Json doc;
    doc["n"] = set.size();
    doc["p"] = set.dim();
    if (mode == CountMode::Facets) {
        doc["profile"] = k_facet_profile(set, workers).e;
        if (k) {
            doc["k"] = *k;
            doc["facets"] = facets_to_json(enumerate_k_facets(set, *k, workers));
        }
    } else {
        if (!k) throw InputError("count --mode sets requires --k");
        doc["k"] = *k;
        doc["ksets"] = ksets_to_json(enumerate_k_sets(set, *k, workers));
    }
    return doc;
}

}  // namespace kfl
