#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace bfa {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static contiguous split of [begin, end) across `threads` workers. Callers
// keep determinism by writing into index-disjoint slots and reducing in
// index order afterwards.
template <typename Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, int threads, Fn&& fn) {
    const std::uint64_t count = end > begin ? end - begin : 0;
    if (count == 0) return;
    const int t = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), count));
    if (t == 1) {
        fn(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    const std::uint64_t per = count / t;
    const std::uint64_t rem = count % t;
    std::uint64_t start = begin;
    for (int i = 0; i < t; ++i) {
        const std::uint64_t len = per + (static_cast<std::uint64_t>(i) < rem ? 1 : 0);
        pool.emplace_back([&fn, start, len] { fn(start, start + len); });
        start += len;
    }
    for (std::thread& th : pool) th.join();
}

}  // namespace bfa
