#pragma once

#include <cstddef>
#include <functional>

namespace promptforge {

/// Runs fn(i) for every i in [0, count) on up to `workers` threads.
/// Callers write results into pre-sized slots indexed by i, so the outcome
/// is independent of scheduling. The first exception thrown by any task is
/// rethrown after all workers finish.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

} // namespace promptforge
