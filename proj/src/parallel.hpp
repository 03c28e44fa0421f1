#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace vidp::detail {

// Runs fn(begin, end) over disjoint contiguous chunks of [0, count). Each
// output element is owned by exactly one chunk, so results do not depend on
// scheduling.
template <class Fn>
void parallel_ranges(int count, Fn&& fn, int min_chunk = 16) {
    const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const int workers = std::clamp(count / std::max(1, min_chunk), 1, hw);
    if (workers == 1) {
        fn(0, count);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const int step = (count + workers - 1) / workers;
    for (int begin = 0; begin < count; begin += step) {
        const int end = std::min(count, begin + step);
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
}

}  // namespace vidp::detail
