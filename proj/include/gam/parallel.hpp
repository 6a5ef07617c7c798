#pragma once

#include <cstddef>
#include <functional>

namespace gam {

// Worker count used by parallel_chunks: set_num_threads() override if
// positive, else GAM_THREADS if set (>=1), else
// std::thread::hardware_concurrency(). Results never depend on the worker
// count, only wall time does.
int num_worker_threads();

// n >= 1 forces the worker count; 0 restores automatic selection.
void set_num_threads(int n);

// Runs body(begin, end) over fixed-size chunks of [0, n). Chunk boundaries
// depend only on n and chunk_size, never on the worker count, so per-chunk
// outputs (and any reduction done in chunk order afterwards) are bitwise
// reproducible across thread counts. chunk_index = begin / chunk_size.
void parallel_chunks(std::size_t n, std::size_t chunk_size,
                     const std::function<void(std::size_t begin, std::size_t end)>& body);

inline std::size_t chunk_count(std::size_t n, std::size_t chunk_size) {
    return (n + chunk_size - 1) / chunk_size;
}

} // namespace gam
