// kfl: batch front end for k-facet enumeration, lifting maps, face
// certificates and exact-count verification.

#include "kfl/errors.hpp"
#include "kfl/face_lab.hpp"
#include "kfl/facet_engine.hpp"
#include "kfl/formula_bank.hpp"
#include "kfl/genpos.hpp"
#include "kfl/io.hpp"
#include "kfl/lift_maps.hpp"
#include "kfl/projection.hpp"
#include "kfl/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using kfl::Json;

unsigned default_workers() {
    if (const char* env = std::getenv("KFL_WORKERS")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring invalid KFL_WORKERS='" << env << "'\n";
        }
    }
    return 1;
}

struct Output {
    std::string path;

    void emit(const std::string& text) const {
        if (path.empty())
            std::cout << text;
        else
            kfl::write_text_file(path, text);
    }
    void emit(const Json& doc) const { emit(doc.dump(2) + "\n"); }
};

kfl::IndexSet parse_indices(const std::string& text) {
    kfl::IndexSet out;
    std::stringstream ss(text);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        try {
            std::size_t used = 0;
            auto v = std::stoul(cell, &used);
            if (used != cell.size()) throw std::invalid_argument(cell);
            out.push_back(v);
        } catch (const std::exception&) {
            throw kfl::InputError("invalid index '" + cell + "' in '" + text + "'");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

kfl::PointSet load(const std::string& path, const std::string& map_key) {
    auto set = kfl::read_point_set_file(path);
    return map_key.empty() ? set : kfl::apply(kfl::map_from_key(map_key), set);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact k-set / k-facet enumeration under polynomial lifting maps"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned workers = default_workers();
    Output out;
    app.add_option("--workers", workers, "worker threads (default $KFL_WORKERS or 1)");
    app.add_option("--out", out.path, "write output to a file instead of stdout");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a seeded point set");
    std::size_t gen_n = 0, gen_d = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_mode = "glp";
    std::int64_t gen_bound = 0;
    bool gen_csv = false;
    gen->add_option("--n", gen_n, "number of points")->required();
    gen->add_option("--d", gen_d, "dimension")->required();
    gen->add_option("--seed", gen_seed, "random seed")->required();
    gen->add_option("--mode", gen_mode, "glp | circle | conic | hom:m | convex | distinct-x1");
    gen->add_option("--bound", gen_bound, "integer coordinate bound (default 4*n*d)");
    gen->add_flag("--csv", gen_csv, "write CSV instead of JSON");

    // lift
    auto* lift = app.add_subcommand("lift", "apply a lifting map to a point set");
    std::string lift_in, lift_map;
    lift->add_option("--in", lift_in, "point set file")->required()->check(CLI::ExistingFile);
    lift->add_option("--map", lift_map, "map key")->required();

    // count
    auto* count = app.add_subcommand("count", "k-facet profile / k-facets / k-sets");
    std::string count_in, count_map, count_mode = "facets";
    std::optional<std::size_t> count_k;
    bool count_csv = false;
    count->add_option("--in", count_in, "point set file")->required()->check(CLI::ExistingFile);
    count->add_option("--map", count_map, "lift before counting");
    count->add_option("--mode", count_mode, "facets | sets")->check(CLI::IsMember({"facets", "sets"}));
    count->add_option("--k", count_k, "level k (lists facets / required for sets)");
    count->add_flag("--csv", count_csv, "profile as CSV rows k,e_k");

    // certify
    auto* certify = app.add_subcommand("certify", "face certificates and neighborliness");
    std::string cert_in, cert_map, cert_subset;
    bool cert_weak = false;
    std::optional<std::size_t> cert_degree, cert_weakly;
    certify->add_option("--in", cert_in, "point set file")->required()->check(CLI::ExistingFile);
    certify->add_option("--map", cert_map, "lift first");
    auto* subset_opt = certify->add_option("--subset", cert_subset, "comma-separated indices");
    certify->add_flag("--weak", cert_weak, "non-strict certificate");
    auto* degree_opt = certify->add_option("--degree", cert_degree, "neighborliness degree up to this cap");
    auto* weakly_opt = certify->add_option("--weakly", cert_weakly, "test weak k-neighborliness");
    subset_opt->excludes(degree_opt)->excludes(weakly_opt);
    degree_opt->excludes(weakly_opt);

    // verify
    auto* verify = app.add_subcommand("verify", "check an exact-count or certificate theorem on a seeded instance");
    std::string theorem;
    std::uint64_t verify_seed = 0;
    std::map<std::string, std::optional<std::int64_t>> verify_params{
        {"n", std::nullopt}, {"m", std::nullopt}, {"k", std::nullopt}, {"d", std::nullopt}, {"p", std::nullopt}};
    verify->add_option("theorem", theorem, "theorem name")->required()->check(CLI::IsMember(kfl::verify_theorems()));
    verify->add_option("--seed", verify_seed, "random seed")->required();
    for (auto& [name, value] : verify_params) verify->add_option("--" + name, value);

    // formula
    auto* formula = app.add_subcommand("formula", "evaluate a closed-form count");
    std::string formula_name;
    std::vector<std::int64_t> formula_args;
    bool formula_table = false;
    formula->add_option("name", formula_name, "formula name")->required();
    formula->add_option("args", formula_args, "integer arguments");
    formula->add_flag("--table", formula_table, "omit the trailing k and print a CSV table over all valid k");

    // project
    auto* project = app.add_subcommand("project", "stereographic projection bijection check");
    std::string proj_in;
    std::size_t proj_vertex = 0, proj_k = 0;
    project->add_option("--in", proj_in, "convex-position point set")->required()->check(CLI::ExistingFile);
    project->add_option("--vertex", proj_vertex, "pole index")->required();
    project->add_option("--k", proj_k, "level")->required();

    // radon
    auto* radon = app.add_subcommand("radon", "Radon partition of p+2 points in R^p");
    std::string radon_in;
    radon->add_option("--in", radon_in, "point set file")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            auto set = kfl::generate(gen_mode, gen_n, gen_d, gen_seed, gen_bound);
            if (gen_csv)
                out.emit(kfl::point_set_to_csv(set));
            else
                out.emit(kfl::point_set_to_json(set));
        } else if (*lift) {
            out.emit(kfl::point_set_to_json(load(lift_in, lift_map)));
        } else if (*count) {
            auto mode = count_mode == "sets" ? kfl::CountMode::Sets : kfl::CountMode::Facets;
            auto set = kfl::read_point_set_file(count_in);
            if (count_csv && mode == kfl::CountMode::Facets) {
                auto lifted = count_map.empty() ? set : kfl::apply(kfl::map_from_key(count_map), set);
                out.emit(kfl::profile_to_csv(kfl::k_facet_profile(lifted, workers)));
            } else {
                out.emit(kfl::run_count(set, count_map, mode, count_k, workers));
            }
        } else if (*certify) {
            auto set = load(cert_in, cert_map);
            Json doc;
            if (cert_degree) {
                doc["neighborliness_degree"] = kfl::neighborliness_degree(set, *cert_degree, workers);
                doc["cap"] = *cert_degree;
            } else if (cert_weakly) {
                auto r = kfl::is_weakly_k_neighborly(set, *cert_weakly, workers);
                doc["k"] = *cert_weakly;
                doc["weakly_k_neighborly"] = r.holds;
                if (r.failing_subset) doc["failing_subset"] = *r.failing_subset;
            } else {
                if (cert_subset.empty()) throw kfl::InputError("certify needs --subset, --degree or --weakly");
                auto subset = parse_indices(cert_subset);
                auto cert = kfl::face_certificate(set, subset, !cert_weak);
                doc["subset"] = subset;
                doc["certificate"] = cert ? kfl::certificate_to_json(*cert) : Json(nullptr);
            }
            out.emit(doc);
        } else if (*verify) {
            kfl::VerifyParams params;
            for (const auto& [name, value] : verify_params)
                if (value) params[name] = *value;
            auto report = kfl::run_verify(theorem, params, verify_seed, workers);
            out.emit(report.to_json());
            return report.pass ? 0 : 1;
        } else if (*formula) {
            const auto& f = kfl::formulas::find(formula_name);
            if (formula_table) {
                if (f.params.empty() || f.params.back() != "k")
                    throw kfl::InputError("--table needs a formula whose last parameter is k");
                if (formula_args.size() + 1 != f.params.size())
                    throw kfl::InputError(formula_name + " --table expects " + std::to_string(f.params.size() - 1) +
                                          " arguments");
                std::ostringstream os;
                os << "k," << formula_name << '\n';
                auto args = formula_args;
                args.push_back(0);
                for (std::int64_t k = 0; k <= 64; ++k) {
                    args.back() = k;
                    try {
                        os << k << ',' << f.evaluate(args) << '\n';
                    } catch (const kfl::InputError&) {
                        if (k > 0) break;
                        throw;
                    }
                }
                out.emit(os.str());
            } else {
                if (formula_args.size() != f.params.size())
                    throw kfl::InputError(formula_name + " expects " + std::to_string(f.params.size()) + " arguments");
                out.emit(std::to_string(f.evaluate(formula_args)) + "\n");
            }
        } else if (*project) {
            auto set = kfl::read_point_set_file(proj_in);
            auto image = kfl::stereographic_project(set, proj_vertex);
            auto through = kfl::facets_through_vertex(set, proj_vertex, proj_k, workers);
            auto profile = kfl::k_facet_profile(image.points, workers);
            std::int64_t projected = proj_k < profile.e.size() ? profile.e[proj_k] : 0;
            Json doc;
            doc["vertex"] = proj_vertex;
            doc["k"] = proj_k;
            doc["facets_through_vertex"] = through;
            doc["projected_e_k"] = projected;
            doc["pass"] = through == projected;
            doc["projection"] = kfl::point_set_to_json(image.points);
            out.emit(doc);
            return through == projected ? 0 : 1;
        } else if (*radon) {
            auto set = kfl::read_point_set_file(radon_in);
            auto witness = kfl::radon_partition(set);
            Json doc = kfl::radon_to_json(witness);
            doc["valid"] = kfl::validate_radon(set, witness);
            auto sep = kfl::weak_separation(set.subset(witness.part_q), set.subset(witness.part_r));
            doc["weak_separator"] = sep ? kfl::hyperplane_to_json(*sep) : Json(nullptr);
            out.emit(doc);
        }
    } catch (const kfl::InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const kfl::DegeneracyError& e) {
        std::cerr << "degenerate input: " << e.what() << '\n';
        return 2;
    } catch (const kfl::GenerationError& e) {
        std::cerr << "generation failed: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
