#pragma once

#include <cstddef>
#include <functional>

namespace rlab {

/// Worker count: set_thread_count() if called, else RLAB_THREADS, else the
/// hardware concurrency.
int thread_count();
void set_thread_count(int n);

/// Runs body(begin, end) over contiguous chunks of [0, n). Chunk boundaries
/// depend only on n and the thread count; callers write into disjoint slots so
/// results never depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace rlab
