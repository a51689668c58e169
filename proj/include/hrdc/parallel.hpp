#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace hrdc {

/// Global worker-count cap (CLI --threads). 0 means "use hardware concurrency".
void set_max_threads(unsigned n);
unsigned max_threads();

/// Splits [0, total) into contiguous blocks and runs fn(block_index, begin, end) on a small
/// thread pool. Callers merge per-block results in block order, which keeps every aggregate
/// deterministic regardless of the worker count.
void parallel_blocks(std::uint64_t total,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn);

}  // namespace hrdc
