#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <vector>

namespace kfl {

using Index = std::size_t;
using IndexSet = std::vector<Index>;

/// Binomial coefficient; 0 whenever n < 0, k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// All r-subsets of {0..n-1} in lexicographic order.
std::vector<IndexSet> combinations(Index n, Index r);

/// Calls fn on every r-subset of `pool` (as values from pool) in
/// lexicographic order of positions. Stops early if fn returns false.
void for_each_combination(const IndexSet& pool, Index r, const std::function<bool(const IndexSet&)>& fn);

/// Evaluates fn(i) for i in [0, count) on up to `workers` threads and returns
/// the results in index order. If any call throws, the exception of the
/// lowest failing index is rethrown after all threads finish.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned workers, Fn&& fn);

/// Deterministic worker count: explicit value if > 0, otherwise 1.
unsigned resolve_workers(unsigned requested);

namespace detail {
void run_parallel(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);
}

template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t count, unsigned workers, Fn&& fn) {
    std::vector<T> results(count);
    std::vector<std::exception_ptr> errors(count);
    detail::run_parallel(count, workers, [&](std::size_t i) {
        try {
            results[i] = fn(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    });
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace kfl
