#pragma once

/**
 * Batch pipelines behind the CLI: theorem verification runs and count
 * tables. Reports are plain JSON so they can be diffed across runs.
 */

#include "kfl/io.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace kfl {

using VerifyParams = std::map<std::string, std::int64_t>;

struct VerifyReport {
    std::string theorem;
    VerifyParams params;  // with defaults filled in
    std::uint64_t seed = 0;
    Json expected;
    Json measured;
    bool pass = false;
    std::optional<PointSet> instance;  // attached when pass is false

    Json to_json() const;
};

/// Theorems: circles, conics, homogeneous, veronese-neighborly, embedding,
/// projection, radon, weakly. Unknown names or parameters throw InputError;
/// generator failures propagate.
VerifyReport run_verify(const std::string& theorem, const VerifyParams& params, std::uint64_t seed,
                        unsigned workers = 1);

const std::vector<std::string>& verify_theorems();

enum class CountMode { Facets, Sets };

/// Lifts `set` by `map_key` (empty: identity) and returns
///   facets: {"n","p","profile"[, "k", "facets"]}
///   sets:   {"n","p","k","ksets"}  (k required)
Json run_count(const PointSet& set, const std::string& map_key, CountMode mode, std::optional<std::size_t> k,
               unsigned workers = 1);

}  // namespace kfl
