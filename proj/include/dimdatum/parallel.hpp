#pragma once

#include <cstddef>
#include <functional>

namespace dimdatum {

/// Worker count: DIMDATUM_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t threadCount();

/// Runs body(i) for i in [0, n) on up to threadCount() threads. Each index is
/// visited exactly once; callers write results by index so output order does
/// not depend on scheduling. The first exception thrown is rethrown.
void parallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace dimdatum
