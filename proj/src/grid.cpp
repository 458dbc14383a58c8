// Copyright 2026 The cmisolate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cmisolate/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "cmisolate/error.hpp"

namespace cmisolate {

OddRange odd_range(std::int64_t bound, Grid grid) {
  if (bound < 1) throw InvalidArgument("bound must be positive");
  if (grid == Grid::Shifted) {
    std::int64_t hi = bound + 1;
    if (hi % 2 == 0) --hi;
    return {3, hi};
  }
  std::int64_t hi = bound % 2 == 0 ? bound - 1 : bound;
  return {1, hi};
}

std::string grid_name(Grid g) { return g == Grid::Shifted ? "shifted" : "inclusive"; }

Grid parse_grid(const std::string& s) {
  if (s == "shifted") return Grid::Shifted;
  if (s == "inclusive") return Grid::Inclusive;
  throw InvalidArgument("unknown grid '" + s + "' (expected shifted or inclusive)");
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("CM_ISOLATE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::int64_t n, unsigned threads, const std::function<void(std::int64_t)>& fn) {
  if (n <= 0) return;
  threads = resolve_threads(threads);
  if (threads <= 1 || n == 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::int64_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::int64_t>(threads, n));
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace cmisolate
