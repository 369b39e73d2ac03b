#pragma once

#include <cstddef>
#include <functional>

namespace growth {

// Worker cap: set_thread_count() wins, then GROWTH_BOUNDS_THREADS, then the
// hardware concurrency.
int thread_count();
void set_thread_count(int n);

// Runs fn(i) for i in [0, n) on up to thread_count() workers, handing out
// indices dynamically. Exceptions from workers are rethrown in the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace growth
