#pragma once

#include <cstddef>
#include <functional>

namespace eigenflow {

// Worker count: EIGENFLOW_THREADS when set (>= 1), else hardware concurrency.
int thread_count();

// Runs fn(i) for i in [begin, end) across thread_count() workers with a
// static block partition, then joins. fn must be safe to call concurrently
// for distinct indices; exceptions are captured and the first one rethrown.
void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& fn);

}  // namespace eigenflow
