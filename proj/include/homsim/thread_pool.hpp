#pragma once

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace homsim {

/// Worker count: hardware concurrency capped by the HOMSIM_THREADS variable.
inline unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("HOMSIM_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
    }
    return n;
}

/// Runs fn(i) for i in [0, n). Work items must be independent; results must
/// be written to per-index slots so the outcome is schedule-independent.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned workers = worker_count();
    if (n == 0) return;
    if (workers <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> threads;
    const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, n));
    threads.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) threads.emplace_back(run);
    for (auto& t : threads) t.join();
}

}  // namespace homsim
