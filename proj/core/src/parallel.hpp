#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace longhop::detail {

/// Requested thread count, or LONGHOP_THREADS, or 1.
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    if (const char* env = std::getenv("LONGHOP_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
        } catch (...) {
        }
    }
    return 1;
}

/// Runs fn(begin, end) over contiguous chunks of [0, n). Chunk boundaries
/// depend only on n and the thread count.
template <typename Fn>
void parallel_chunks(std::uint64_t n, unsigned threads, Fn&& fn) {
    if (threads <= 1 || n < 4096) {
        fn(std::uint64_t{0}, n);
        return;
    }
    const std::uint64_t step = (n + threads - 1) / threads;
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t begin = std::min<std::uint64_t>(n, t * step);
        const std::uint64_t end = std::min<std::uint64_t>(n, begin + step);
        if (begin == end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
}

}  // namespace longhop::detail
