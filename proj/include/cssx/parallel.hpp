#pragma once

#include <cstddef>
#include <functional>

namespace cssx {

/// Worker count from CSSX_THREADS when set (minimum 1), otherwise the
/// hardware concurrency.
std::size_t default_thread_count();

/// Runs body(0..n-1) across at most `threads` workers. Each index is
/// processed exactly once; callers writing to per-index slots get identical
/// results for any thread count. The first exception thrown by a body is
/// rethrown after all workers join.
void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace cssx
