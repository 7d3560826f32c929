#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace cw {

/// Knobs shared by every exhaustive sweep.
struct SweepOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Overrides the sweep's default work bound when set.
  std::optional<std::uint64_t> work_limit;
};

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into contiguous blocks, one per worker, and calls
/// fn(worker, begin, end) for each. The partition depends only on count and
/// the worker count. The first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_blocks(std::uint64_t count, unsigned workers, Fn&& fn) {
  workers = resolve_workers(workers);
  if (workers > count) workers = count == 0 ? 1 : static_cast<unsigned>(count);
  if (workers == 1) {
    fn(0u, std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    auto begin = static_cast<std::uint64_t>(static_cast<unsigned __int128>(count) * w / workers);
    auto end = static_cast<std::uint64_t>(static_cast<unsigned __int128>(count) * (w + 1) / workers);
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace cw
