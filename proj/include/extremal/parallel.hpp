#pragma once

#include <cstddef>
#include <functional>

namespace extremal {

/// Worker cap used by parallel_for. Defaults to EXTREMAL_CECH_THREADS when set,
/// otherwise to the hardware concurrency.
int thread_limit();
void set_thread_limit(int threads);

/// Calls fn(i) for i in [0, count) on up to thread_limit() threads. Each index is
/// visited exactly once; fn must only write to per-index state. If any call throws,
/// the exception from the lowest failing index is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace extremal
