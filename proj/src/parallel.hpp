#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace su4::detail {

/// Runs fn(chunk) for chunk in [0, n_chunks) on up to `workers` threads.
/// Chunks are claimed dynamically; callers write results into per-chunk slots
/// so the outcome never depends on scheduling. The first exception thrown by
/// any chunk is rethrown on the calling thread.
template <class Fn>
void for_each_chunk(std::int64_t n_chunks, unsigned workers, Fn&& fn) {
  const auto n_threads = static_cast<std::int64_t>(std::max(1u, workers));
  if (n_threads == 1 || n_chunks <= 1) {
    for (std::int64_t c = 0; c < n_chunks; ++c) fn(c);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        fn(c);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n_chunks);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  for (std::int64_t t = 0; t < std::min(n_threads, n_chunks); ++t) pool.emplace_back(body);
  pool.clear();
  if (error) std::rethrow_exception(error);
}

}  // namespace su4::detail
