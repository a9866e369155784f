#include "striplab/util.hpp"

#include <algorithm>
#include <atomic>

namespace striplab {

namespace {
std::atomic<int> g_threads{0};
}

void set_worker_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int worker_threads() {
    int n = g_threads.load();
    if (n > 0) return n;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : (int)hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body) {
    int nt = worker_threads();
    if (nt <= 1 || n < 64) {
        body(0, n);
        return;
    }
    std::size_t chunk = (n + nt - 1) / nt;
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (int t = 0; t < nt; ++t) {
        std::size_t lo = std::min(n, (std::size_t)t * chunk);
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

} // namespace striplab
