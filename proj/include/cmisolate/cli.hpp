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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cmisolate/exactfield.hpp"
#include "cmisolate/grid.hpp"
#include "cmisolate/heuristic.hpp"
#include "cmisolate/report.hpp"

namespace cmisolate {

enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,
  kExitInvalidConfig = 2,
  kExitFieldInvalid = 3,
  kExitSearchExhausted = 4,
};

struct RunConfig {
  std::string command;  // "field validate", "field nonnormal", "search", ...

  std::optional<std::string> preset;
  std::optional<std::int64_t> d, b, c;
  std::optional<std::int64_t> class_number;

  // non-normal field (a, b, d)
  std::string nn_a, nn_b, nn_d;

  std::vector<std::int64_t> bounds;
  std::vector<std::uint64_t> zs;
  std::vector<std::uint64_t> ls;
  std::int64_t lo = 3, hi = 2001;
  Grid grid = Grid::Shifted;
  PredictionMode mode = PredictionMode::Constant;
  std::optional<PredictionMode> with_prediction;  // search: add predicted column
  bool with_actual = false;                       // predict: add actual column
  std::uint64_t z_max = 1000000;
  std::uint64_t min_p = 7, min_I = 2;

  unsigned target_bits = 292;
  unsigned large_bits = 80;
  std::optional<std::uint64_t> seed;
  std::uint64_t max_attempts = 2000000;
  std::uint64_t smooth_bound = 1u << 20;

  std::int64_t ell_d = 1;
  unsigned k = 8;
  bool experimental = false;

  std::string format = "markdown";
  std::string output;  // empty: stdout
  unsigned threads = 0;

  // Preset or explicit (d, b, c); throws FieldError / InvalidArgument.
  CyclicCMField field() const;
};

Report execute(const RunConfig& cfg);
std::string render(const Report& r, const std::string& format);

// Full command line entry point; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmisolate
