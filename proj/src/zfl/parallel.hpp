#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace zfl {

/// Worker count used by the parallel kernels. Defaults to the ZFL_THREADS
/// environment variable, else hardware concurrency.
std::size_t thread_count();
void set_thread_count(std::size_t n);  // 0 restores the default

/// Splits [0, total) into `chunks` contiguous ranges and runs
/// `body(chunk_index, begin, end)` on up to thread_count() workers. Chunks are
/// handed out dynamically; callers must combine per-chunk results in chunk
/// order (or commutatively) so output does not depend on the worker count.
void parallel_chunks(std::uint64_t total, std::size_t chunks,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body);

}  // namespace zfl
