#pragma once

#include <functional>

namespace schubertq {

/// Worker-thread budget: SCHUBERTQ_THREADS when set (clamped to >= 1),
/// otherwise the hardware concurrency.
int thread_budget();

/// Runs fn(i) for i in [0, count) on up to thread_budget() threads. Each
/// index is visited exactly once and writes must be disjoint per index, so
/// results do not depend on the schedule. Exceptions from workers are
/// rethrown on the calling thread.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace schubertq
