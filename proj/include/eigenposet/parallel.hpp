#pragma once

#include <cstddef>
#include <functional>

namespace eigenposet {

// Worker count used by the library; 1 unless changed.
unsigned worker_threads();
void set_worker_threads(unsigned count);

// Runs body(i) for i in [0, count).  The first exception is rethrown after
// all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace eigenposet
