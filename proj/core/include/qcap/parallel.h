#pragma once

#include <cstddef>
#include <functional>

namespace qcap {

/// Worker count: hardware concurrency, capped by QCAP_THREADS when set.
unsigned worker_count();

/// Calls fn(i) for i in [0, n) across worker_count() threads. Each index is
/// handled exactly once; callers write results by index, so output order is
/// independent of scheduling. If calls throw, one of the exceptions is
/// rethrown after all workers stop.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

}  // namespace qcap
