#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace talbot {

/// Deterministic parallel map over [0, n): each index is processed exactly
/// once and workers write only to their own slots, so the output does not
/// depend on the thread count. threads = 0 picks hardware_concurrency.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nt = threads > 0 ? static_cast<std::size_t>(threads) : (hw ? hw : 1);
    if (nt > n) nt = n ? n : 1;
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t w = 0; w < nt; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += nt) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace talbot
