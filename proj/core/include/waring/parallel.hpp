#pragma once

#include <cstddef>
#include <functional>

namespace waring {

// Worker count used by parallel_for: min(hardware_concurrency, WARING_THREADS).
// WARING_THREADS=1 disables threading entirely.
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Each index is processed exactly once; callers
// must write only to per-index slots so the result is identical for any
// thread count. Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

// Block variant: fn(begin, end) over a partition of [0, n) into contiguous
// chunks. Lower scheduling overhead for cheap per-index work.
void parallel_for_blocks(std::size_t n,
                         const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace waring
