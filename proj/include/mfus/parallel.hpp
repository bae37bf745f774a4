#pragma once

#include <functional>

namespace mfus {

// Worker count used by every parallel loop; 0 means hardware concurrency.
void set_workers(int n);
int workers();

// Runs body(i) for i in [0, n). Callers write results into per-index slots,
// so output order never depends on scheduling.
void parallel_for(int n, const std::function<void(int)>& body);

} // namespace mfus
