#pragma once

#include <cstddef>
#include <functional>

namespace srrel {

/// Number of hardware threads, at least 1.
std::size_t available_workers();

/// Runs body(i) for i in [0, count) on up to `workers` threads. Indices are claimed
/// dynamically, so callers must write results by index. Exceptions from any body are
/// rethrown on the calling thread (the first one wins).
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace srrel
