#include "kfl/combinatorics.hpp"

#include <atomic>
#include <thread>

namespace kfl {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

std::vector<IndexSet> combinations(Index n, Index r) {
    std::vector<IndexSet> out;
    if (r > n) return out;
    IndexSet pool(n);
    for (Index i = 0; i < n; ++i) pool[i] = i;
    for_each_combination(pool, r, [&](const IndexSet& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

void for_each_combination(const IndexSet& pool, Index r, const std::function<bool(const IndexSet&)>& fn) {
    const Index n = pool.size();
    if (r > n) return;
    std::vector<Index> pos(r);
    for (Index i = 0; i < r; ++i) pos[i] = i;
    IndexSet current(r);
    while (true) {
        for (Index i = 0; i < r; ++i) current[i] = pool[pos[i]];
        if (!fn(current)) return;
        // advance to the next position tuple
        Index i = r;
        while (i > 0 && pos[i - 1] == n - r + (i - 1)) --i;
        if (i == 0) return;
        ++pos[i - 1];
        for (Index j = i; j < r; ++j) pos[j] = pos[j - 1] + 1;
    }
}

unsigned resolve_workers(unsigned requested) { return requested == 0 ? 1u : requested; }

namespace detail {

void run_parallel(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body) {
    workers = resolve_workers(workers);
    if (workers == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> threads;
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    threads.reserve(used);
    for (unsigned t = 0; t < used; ++t)
        threads.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
}

}  // namespace detail

}  // namespace kfl
