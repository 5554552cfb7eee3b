#pragma once

#include <functional>

namespace liecoh {

/// Worker count: LIECOH_THREADS when set (0 means sequential), otherwise the
/// hardware concurrency capped at 8.
int thread_budget();

/// Runs fn(0..n-1) on up to thread_budget() workers. Results must not depend
/// on scheduling; exceptions are rethrown on the calling thread.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace liecoh
