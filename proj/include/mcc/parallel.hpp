#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "mcc/error.hpp"

namespace mcc {

// Wall-clock budget polled cooperatively by long-running algorithms.
class Deadline {
 public:
  using clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::duration<double> budget)
      : at_(clock::now() +
            std::chrono::duration_cast<clock::duration>(budget)),
        armed_(true) {}

  bool expired() const { return armed_ && clock::now() >= at_; }

  void check() const {
    if (expired()) throw Error(ErrorCode::timeout, "time budget exceeded");
  }

 private:
  clock::time_point at_{};
  bool armed_ = false;
};

struct RunOptions {
  unsigned threads = 1;
  const Deadline* deadline = nullptr;

  void check_deadline() const {
    if (deadline != nullptr) deadline->check();
  }
};

// Runs fn(i) for i in [0, n) on up to `threads` workers. Work is handed out
// in contiguous chunks; fn must only write to slot i of any shared output so
// results are independent of the schedule. The first exception is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, threads), n == 0 ? 1 : n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto body = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t begin = next.fetch_add(kChunk);
      if (begin >= n) return;
      const std::size_t end = std::min(n, begin + kChunk);
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace mcc
