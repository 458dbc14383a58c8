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
#include <string>

#include <gmpxx.h>

#include "cmisolate/exactfield.hpp"

namespace cmisolate {

enum class SplittingClass { TotallySplit, HalfSplit, Inert, Ramified };

std::string splitting_class_name(SplittingClass s);

struct LocalData {
  std::uint64_t l = 0;
  SplittingClass cls = SplittingClass::Inert;
  bool divides_b = false;
  mpq_class prob_not_I;
  mpq_class prob_neither;
  mpq_class prob_not_p;
  mpq_class c_l;
  mpq_class c_p_l;
};

// l odd prime. For l | b the Kummer generator reduces to -c^2, so l splits
// completely exactly when -1 is a square mod l.
SplittingClass classify_prime(const CyclicCMField& f, std::uint64_t l);
// For l not dividing b d with d a square mod l: is (2 c r - 2 d) / b^2 a square for this root r?
bool totally_split_with_root(const CyclicCMField& f, std::uint64_t l, std::uint64_t r);

mpq_class prob_not_dividing_I(const CyclicCMField& f, std::uint64_t l);
mpq_class prob_neither(const CyclicCMField& f, std::uint64_t l);
mpq_class prob_not_dividing_p(const CyclicCMField& f, std::uint64_t l);
// prob_neither / (1 - 1/l)^2.
mpq_class correction_factor(const CyclicCMField& f, std::uint64_t l);
// prob_not_dividing_p / (1 - 1/l).
mpq_class cp_factor(const CyclicCMField& f, std::uint64_t l);
LocalData local_data(const CyclicCMField& f, std::uint64_t l);

// Checks, mod l, 16 p = ((b/2) U^2 + e r)((b/2) V^2 - e' r) and 8 I = +-b e' (U - e V)(U + e V)
// with r^2 = d, e = (-c + r)/b, e' = (-c - r)/b, U = C - e D, V = C - e' D.
bool uv_check(const CyclicCMField& f, std::uint64_t l, std::int64_t C, std::int64_t D);

}  // namespace cmisolate
