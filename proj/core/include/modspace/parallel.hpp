#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace modspace {

/// Number of worker threads. MODSPACE_WORKERS caps it; otherwise the hardware
/// concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) on up to worker_count() threads. Items are
/// claimed dynamically; callers write results into per-index slots and reduce
/// afterwards, so reductions stay deterministic. The first exception thrown by
/// any item is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace modspace
