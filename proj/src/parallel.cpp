#include "gam/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace gam {

namespace {
std::atomic<int> g_forced_threads{0};
}

int num_worker_threads() {
    const int forced = g_forced_threads.load(std::memory_order_relaxed);
    if (forced >= 1) {
        return forced;
    }
    if (const char* env = std::getenv("GAM_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) {
            return n;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_num_threads(int n) {
    g_forced_threads.store(n < 0 ? 0 : n, std::memory_order_relaxed);
}

void parallel_chunks(std::size_t n, std::size_t chunk_size,
                     const std::function<void(std::size_t, std::size_t)>& body) {
    if (n == 0) {
        return;
    }
    const std::size_t chunks = chunk_count(n, chunk_size);
    const int threads = num_worker_threads();
    if (threads <= 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            const std::size_t begin = c * chunk_size;
            body(begin, std::min(begin + chunk_size, n));
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= chunks) {
                return;
            }
            const std::size_t begin = c * chunk_size;
            body(begin, std::min(begin + chunk_size, n));
        }
    };
    std::vector<std::jthread> pool;
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), chunks);
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back(worker);
    }
}

} // namespace gam
