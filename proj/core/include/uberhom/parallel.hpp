#pragma once

#include <cstddef>
#include <functional>

namespace uberhom {

// Worker count: UBERHOM_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
std::size_t thread_count();

// Runs fn(0..n-1) across threads. Callers write results into per-index slots,
// so the outcome never depends on scheduling. The exception from the lowest
// failing index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace uberhom
