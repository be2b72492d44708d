#pragma once

#include <cstddef>
#include <functional>

namespace oropeak {

/// Number of worker threads to use when the caller passes 0:
/// OROPEAK_THREADS from the environment if set, otherwise
/// std::thread::hardware_concurrency().
unsigned resolve_thread_count(unsigned requested);

/// Run fn(i) for i in [0, n) on up to `threads` workers (0 = resolve from
/// the environment). Work items are claimed via an atomic counter; callers
/// must write results into per-index slots so that output does not depend
/// on scheduling. Exceptions from workers are rethrown on the calling
/// thread (first one wins).
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

} // namespace oropeak
