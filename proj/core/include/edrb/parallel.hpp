#pragma once

#include <cstddef>
#include <functional>

namespace edrb {

// Worker count: EDRB_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index is
// processed exactly once; exceptions are rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace edrb
