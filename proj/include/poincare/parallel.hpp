#pragma once

#include <cstddef>
#include <functional>

namespace poincare {

/// Worker count: POINCARE_THREADS if set to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Indices are
/// handed out in fixed contiguous chunks; callers write results by index so
/// the outcome does not depend on scheduling. The first exception thrown by
/// any body is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace poincare
