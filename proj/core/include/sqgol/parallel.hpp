#pragma once

#include <cstddef>
#include <functional>

namespace sqgol {

/// Name of the environment variable that sets the worker-pool size.
inline constexpr const char* kThreadsEnv = "SQGOL_THREADS";

/// Worker count: SQGOL_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t default_worker_count();

/// Runs body(i) for every i in [0, n) on up to `workers` threads (0 means
/// default_worker_count()). Indices are handed out dynamically, so bodies must
/// write only to their own slot. The first exception thrown by any body is
/// rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  std::size_t workers = 0);

}  // namespace sqgol
