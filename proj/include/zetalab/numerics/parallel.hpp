#pragma once

#include <cstddef>
#include <functional>

namespace zetalab::numerics {

/// Caps the number of worker threads used by parallel_for (0 restores the
/// hardware default).
void set_max_threads(unsigned n);
unsigned max_threads();

/// Calls body(i) for every i in [0, count) on up to max_threads() workers.
/// Scheduling is dynamic, so bodies must write to per-index slots; callers
/// combine those slots in index order to keep results independent of the
/// thread count. The first exception thrown by a body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace zetalab::numerics
