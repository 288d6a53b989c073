#pragma once

#include <functional>

namespace localdeg {

/// Worker cap: LOCALDEG_THREADS when set (>=1), otherwise the hardware
/// concurrency. Results never depend on the value — work items are
/// indexed, each writes its own slot, and reductions run afterwards in
/// index order.
int worker_count();

/// Runs fn(0..count-1) across workers. fn must only touch state owned
/// by its index.
void parallel_for(long count, const std::function<void(long)>& fn);

} // namespace localdeg
