#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace loopnr {

/// Size bounds and execution knobs shared by every enumeration.
struct Limits {
  std::size_t max_n = 4096;            ///< largest structure any analysis accepts
  std::size_t max_subloop_n = 24;      ///< largest loop for full subloop enumeration
  std::size_t max_subloops = 200000;   ///< largest lattice (subloops, N-subloops, left ideals)
  std::size_t max_family_n = 64;       ///< largest ring for primitive-family enumeration
  std::size_t max_families = 100000;   ///< cap on enumerated idempotent families
  std::size_t max_matrix = 6561;       ///< largest matrix ring the generator builds
  unsigned threads = 1;

  /// Defaults overridden by LOOPNR_MAX_N, LOOPNR_MAX_SUBLOOP_N, LOOPNR_MAX_SUBLOOPS,
  /// LOOPNR_MAX_FAMILY_N, LOOPNR_MAX_FAMILIES, LOOPNR_MAX_MATRIX and LOOPNR_THREADS.
  static Limits from_env();
};

void require_within(const char* what, std::size_t value, std::size_t limit);

/// Runs fn(i) for i in [0, count) over up to `threads` workers. Each index is
/// visited exactly once; callers write results into per-index slots so the
/// outcome never depends on scheduling. The first exception is rethrown.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& fn) {
  const std::size_t workers = std::min<std::size_t>(threads == 0 ? 1 : threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace loopnr
