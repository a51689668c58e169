#include "hrdc/parallel.hpp"

#include <algorithm>
#include <atomic>

namespace hrdc {

namespace {
std::atomic<unsigned> g_max_threads{0};
}

void set_max_threads(unsigned n) { g_max_threads.store(n); }

unsigned max_threads() {
    unsigned n = g_max_threads.load();
    if (n == 0) n = std::thread::hardware_concurrency();
    return std::max(1u, n);
}

void parallel_blocks(std::uint64_t total,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (total == 0) return;
    unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(max_threads(), total));
    if (workers <= 1) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned b = 0; b < workers; ++b) {
        std::uint64_t begin = b * chunk;
        std::uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, b, begin, end] { fn(b, begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace hrdc
