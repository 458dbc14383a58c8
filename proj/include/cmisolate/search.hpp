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
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmisolate/exactfield.hpp"
#include "cmisolate/grid.hpp"
#include "cmisolate/primality.hpp"
#include "cmisolate/weilnum.hpp"

namespace cmisolate {

struct PairHit {
  std::int64_t C = 0;
  std::int64_t D = 0;
  mpz_class p;
  mpz_class I;
};

struct SearchReport {
  CyclicCMField field;
  std::int64_t bound = 0;
  Grid grid = Grid::Shifted;
  OddRange range;
  std::uint64_t count = 0;
  std::vector<PairHit> hits;
  double wall_ms = 0;

  std::string convention() const;
};

// Odd C, D on the grid, B = +1; counts pairs with p and I both prime.
SearchReport count_prime_pairs(const CyclicCMField& f, std::int64_t bound, Grid grid = Grid::Shifted,
                               unsigned threads = 0);
// Same count over an explicit rectangle of odd values.
std::uint64_t count_prime_pairs_in(const CyclicCMField& f, const OddRange& rows, const OddRange& cols,
                                   std::vector<PairHit>* hits = nullptr);

struct FrequencyResult {
  std::uint64_t l = 0;
  std::int64_t lo = 0, hi = 0;
  mpz_class good;   // pairs with l dividing neither p nor I
  mpz_class total;
  mpq_class exact;  // good / total
  double frequency = 0;
};

// Counts residue classes mod l; no big arithmetic.
FrequencyResult empirical_frequency(const CyclicCMField& f, std::uint64_t l, std::int64_t lo, std::int64_t hi);

struct FindConfig {
  unsigned target_p_bits = 80;
  unsigned large_prime_bits = 80;
  std::uint64_t seed = 1;
  std::uint64_t max_attempts = 2000000;
  std::uint64_t smooth_bound = 1u << 20;
  PrimalityPolicy policy;
};

struct FindResult {
  WeilCandidate candidate;
  IsolationClass isolation;
  std::uint64_t attempts = 0;
  unsigned cd_bits = 0;
};

// Samples odd C, D of about (target_p_bits + 4) / 4 bits from a seeded GMP generator.
FindResult find_isolated(const CyclicCMField& f, const FindConfig& cfg);

struct EllipticHit {
  std::int64_t d = 1;
  mpz_class p, n, A, B;
  std::uint64_t attempts = 0;
};

// p = A^2 + d B^2 prime and n = (p + 1)/2 - A or (p + 1)/2 + A prime.
// A must be even for d = 1 and odd for the experimental d = 2 mod 4.
std::optional<EllipticHit> elliptic_analogue_check(std::int64_t d, const mpz_class& A, const mpz_class& B,
                                                   bool experimental = false);

struct EllipticConfig {
  std::int64_t d = 1;
  unsigned k = 8;
  std::optional<std::uint64_t> seed;  // absent: deterministic scan in increasing B, then A
  bool experimental = false;
  std::uint64_t max_attempts = 1000000;
};

EllipticHit elliptic_analogue_search(const EllipticConfig& cfg);

}  // namespace cmisolate
