#pragma once

#include <cstddef>
#include <functional>

namespace tessella {

// Worker count for parallel loops. Defaults to TESSELLA_THREADS if set,
// otherwise the hardware concurrency (at most 8).
int thread_count();
void set_thread_count(int n);

// Calls f(i) for every i in [0, n). f may only write state owned by index i.
// The first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f);

}  // namespace tessella
