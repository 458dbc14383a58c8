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

#include <gmpxx.h>

namespace cmisolate {

// Below 2^64 the answer is unconditional (Miller-Rabin on the first twelve
// prime bases). Above, a strong Lucas test (Selfridge parameters) plus
// `rounds_above` strong tests on seeded pseudo-random bases. A composite
// verdict is always correct.
struct PrimalityPolicy {
  unsigned rounds_above = 64;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

bool is_prime_u64(std::uint64_t n);
bool is_probable_prime(const mpz_class& n, const PrimalityPolicy& policy = {});

namespace detail {
bool miller_rabin_u64(std::uint64_t n, std::uint64_t base);
bool miller_rabin(const mpz_class& n, const mpz_class& base);
bool strong_lucas_selfridge(const mpz_class& n);
}  // namespace detail

}  // namespace cmisolate
