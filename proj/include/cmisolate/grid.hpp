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

#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace cmisolate {

// Enumeration grid for (C, D). Shifted: odd values in [3, bound + 1], the default.
// Inclusive: odd values in [1, bound].
enum class Grid { Shifted, Inclusive };

struct OddRange {
  std::int64_t lo = 3;
  std::int64_t hi = 3;
  std::int64_t size() const { return hi < lo ? 0 : (hi - lo) / 2 + 1; }
  std::int64_t at(std::int64_t i) const { return lo + 2 * i; }
};

OddRange odd_range(std::int64_t bound, Grid grid);
std::string grid_name(Grid g);
Grid parse_grid(const std::string& s);

// 0 means: CM_ISOLATE_THREADS if set and valid, else hardware concurrency.
unsigned resolve_threads(unsigned requested);

// Calls fn(i) for i in [0, n) on up to `threads` workers. Work is handed out in
// index order; callers store results per index so merging order never depends
// on the schedule.
void parallel_for(std::int64_t n, unsigned threads, const std::function<void(std::int64_t)>& fn);

}  // namespace cmisolate
