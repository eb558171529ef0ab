#ifndef FREYBOUND_PARALLEL_HPP
#define FREYBOUND_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace freybound {

// Splits [0, total) into at most `workers` contiguous chunks and runs
// fn(begin, end) on each, possibly concurrently. Per-chunk results come
// back in chunk order, so any associative merge is independent of the
// worker count and of scheduling; callers rely on this for the
// determinism contract.
template <typename R, typename Fn>
std::vector<R> chunked_parallel(std::size_t total, unsigned workers, Fn&& fn) {
    if (workers == 0) workers = 1;
    std::size_t nchunks = std::min<std::size_t>(workers, total);
    std::vector<R> results;
    if (total == 0) return results;
    if (nchunks <= 1) {
        results.push_back(fn(std::size_t(0), total));
        return results;
    }
    results.resize(nchunks);
    std::vector<std::thread> threads;
    threads.reserve(nchunks);
    std::size_t base = total / nchunks, extra = total % nchunks, begin = 0;
    for (std::size_t c = 0; c < nchunks; ++c) {
        std::size_t len = base + (c < extra ? 1 : 0);
        std::size_t end = begin + len;
        threads.emplace_back([&results, &fn, c, begin, end] { results[c] = fn(begin, end); });
        begin = end;
    }
    for (auto& t : threads) t.join();
    return results;
}

}  // namespace freybound

#endif
