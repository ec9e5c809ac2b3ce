#pragma once

#include <cstddef>
#include <functional>

namespace fock {

/// Worker count: FOCKCALC_THREADS if set to a positive integer, otherwise the
/// machine's hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count). Each index runs exactly once; callers
/// write results into per-index slots so output order never depends on
/// scheduling. The first exception thrown by any body is rethrown.
void parallel_for(size_t count, const std::function<void(size_t)>& body);

}  // namespace fock
