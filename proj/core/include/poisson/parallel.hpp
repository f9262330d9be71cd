#pragma once

#include <cstddef>
#include <functional>

namespace poisson {

/// Runs body(i) for i in [0, count) on up to `threads` workers (0 picks the
/// hardware concurrency). Each index runs exactly once; callers write into
/// slot i so results do not depend on scheduling. The first exception thrown
/// by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

}  // namespace poisson
