#pragma once

#include <cstddef>
#include <functional>

namespace pearcey {

// Worker count used by parallel_for. 0 restores the hardware default.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs body(i) for i in [0, n) on up to thread_count() threads.
// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pearcey
