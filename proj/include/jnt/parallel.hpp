#pragma once

#include <cstddef>
#include <functional>

namespace jnt {

// Worker count: JOHNSON_NT_THREADS if set and positive, else the hardware concurrency.
std::size_t worker_count();

// Runs body(i) for i in [0, n). Indices are split into contiguous chunks, one per
// worker. The exception thrown for the smallest index, if any, is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace jnt
