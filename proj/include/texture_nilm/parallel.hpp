#pragma once

#include <cstddef>
#include <functional>

namespace tnilm {

/// Worker count from TEXTURE_NILM_THREADS; 0 or unset means hardware concurrency.
std::size_t configured_threads();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Indices are
/// claimed dynamically, so callers must write results into per-index slots.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& body);

}  // namespace tnilm
