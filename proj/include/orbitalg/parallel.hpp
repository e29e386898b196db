// Copyright 2026 The orbitalg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORBITALG_PARALLEL_HPP
#define ORBITALG_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "orbitalg/error.hpp"

namespace orbitalg {

// Optional wall-clock budget polled by long checks.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget)
      : end_(std::chrono::steady_clock::now() + budget) {}

  bool expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }
  void check() const {
    if (expired()) throw Timeout();
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

// Worker count: explicit value if nonzero, else ORBITALG_THREADS, else hardware.
inline unsigned resolve_threads(unsigned requested = 0) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("ORBITALG_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(i) for i in [0, count) on up to `threads` workers. Work is
// claimed in index order; the first exception thrown is rethrown.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
  threads = std::max(1u, threads);
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  pool.reserve(spawn);
  for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Evaluates produce(i) in parallel one block at a time and feeds the results
// to consume(i, result) sequentially in index order. Stops as soon as consume
// returns false, so early exits are identical for every thread count.
template <class Produce, class Consume>
void ordered_scan(std::size_t count, unsigned threads, Produce&& produce, Consume&& consume,
                  const Deadline& deadline = {}) {
  using Result = decltype(produce(std::size_t{0}));
  threads = std::max(1u, threads);
  const std::size_t block = threads == 1 ? 1 : std::size_t{4} * threads;
  std::vector<std::optional<Result>> slots(block);
  for (std::size_t start = 0; start < count; start += block) {
    deadline.check();
    std::size_t len = std::min(block, count - start);
    parallel_for(len, threads, [&](std::size_t k) { slots[k].emplace(produce(start + k)); });
    for (std::size_t k = 0; k < len; ++k) {
      if (!consume(start + k, std::move(*slots[k]))) return;
      slots[k].reset();
    }
  }
}

}  // namespace orbitalg

#endif  // ORBITALG_PARALLEL_HPP
