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

namespace cmisolate {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 powmod(u64 base, u64 exp, u64 m);

// Reduce a signed value into [0, m).
inline u64 mod_reduce(i64 x, u64 m) {
  i64 r = x % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

u64 inv_mod(u64 a, u64 p);  // p prime, a != 0 mod p

// Legendre symbol (a/p) for odd prime p: -1, 0 or 1.
int legendre(u64 a, u64 p);

// Tonelli-Shanks. Returns the even one of the two roots, nullopt for a non-residue.
std::optional<u64> sqrt_mod(u64 a, u64 p);

// All primes <= limit, ascending.
std::vector<std::uint32_t> sieve_primes(u64 limit);

bool is_perfect_square(const mpz_class& n);

// Square-free kernel of n > 0 (product of primes with odd exponent).
// Exact for n < 2^63; larger inputs throw InvalidArgument.
mpz_class squarefree_kernel(const mpz_class& n);
bool is_squarefree(const mpz_class& n);

std::string to_string(const mpz_class& n);
std::string to_string(const mpq_class& q);

// Parse a decimal integer; throws InvalidArgument on junk.
mpz_class parse_mpz(const std::string& s);

i64 to_i64(const mpz_class& n);  // throws InvalidArgument when out of range

}  // namespace cmisolate
