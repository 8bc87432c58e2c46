#pragma once

#include <cstddef>
#include <functional>

namespace wradon {

/// Worker count from an explicit request; 0 means WRADON_WORKERS or hardware concurrency.
int resolve_workers(int requested);

/// Runs body(begin, end) over [0, n) split into contiguous chunks on up to `workers` threads.
/// Chunks are write-disjoint by contract; the first exception thrown (lowest chunk) is rethrown.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace wradon
