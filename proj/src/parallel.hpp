#pragma once

#include <cstddef>
#include <functional>

namespace hitcalc::detail {

// Worker count: hardware concurrency, capped by HITCALC_THREADS when set.
std::size_t worker_count();

// Calls fn(i) for every i in [0, n). Each index is visited exactly once; the
// caller must make fn(i) write only to slot i of its output.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);
// Same, with an explicit worker limit. The first exception thrown by any
// fn(i) is rethrown once every worker has stopped.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  std::size_t max_workers);

}  // namespace hitcalc::detail
