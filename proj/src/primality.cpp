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

#include "cmisolate/primality.hpp"

#include <array>

#include "cmisolate/arith.hpp"

namespace cmisolate {

namespace {

constexpr std::array<std::uint32_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Halve x modulo odd n.
void half_mod(mpz_class& x, const mpz_class& n) {
  if (mpz_odd_p(x.get_mpz_t())) x += n;
  x >>= 1;
}

void reduce(mpz_class& x, const mpz_class& n) { mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t()); }

}  // namespace

namespace detail {

bool miller_rabin_u64(u64 n, u64 base) {
  base %= n;
  if (base == 0) return true;
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool miller_rabin(const mpz_class& n, const mpz_class& base) {
  const mpz_class nm1 = n - 1;
  mpz_class d = nm1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  mpz_class x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x;
    reduce(x, n);
    if (x == nm1) return true;
  }
  return false;
}

bool strong_lucas_selfridge(const mpz_class& n) {
  if (n == 2) return true;
  if (n < 2 || mpz_even_p(n.get_mpz_t())) return false;
  if (is_perfect_square(n)) return false;

  // Selfridge method A: first D in 5, -7, 9, -11, ... with (D/n) = -1.
  long D = 5;
  for (;;) {
    mpz_class dz = D;
    int j = mpz_jacobi(dz.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(dz) != n) return false;
    D = D > 0 ? -(D + 2) : -D + 2;
  }
  const long P = 1;
  const long Q = (1 - D) / 4;
  const mpz_class Dz = D;
  const mpz_class Qz = Q;

  mpz_class d = n + 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;

  mpz_class U = 1, V = P, Qk = Qz;
  reduce(Qk, n);
  const size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
  for (size_t i = bits - 1; i-- > 0;) {
    U = U * V;
    reduce(U, n);
    V = V * V - 2 * Qk;
    reduce(V, n);
    Qk = Qk * Qk;
    reduce(Qk, n);
    if (mpz_tstbit(d.get_mpz_t(), i)) {
      mpz_class U2 = P * U + V;
      mpz_class V2 = Dz * U + P * V;
      reduce(U2, n);
      reduce(V2, n);
      half_mod(U2, n);
      half_mod(V2, n);
      U = U2;
      V = V2;
      Qk = Qk * Qz;
      reduce(Qk, n);
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned long r = 1; r < s; ++r) {
    V = V * V - 2 * Qk;
    reduce(V, n);
    if (V == 0) return true;
    Qk = Qk * Qk;
    reduce(Qk, n);
  }
  return false;
}

}  // namespace detail

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (std::uint32_t q : kBases) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  if (n < 41 * 41) return true;
  for (std::uint32_t q : kBases) {
    if (!detail::miller_rabin_u64(n, q)) return false;
  }
  return true;
}

bool is_probable_prime(const mpz_class& n, const PrimalityPolicy& policy) {
  if (sgn(n) <= 0) return false;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
    return is_prime_u64(mpz_get_ui(n.get_mpz_t()));
  }
  static const std::vector<std::uint32_t> small = sieve_primes(1000);
  for (std::uint32_t q : small) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return false;
  }
  if (!detail::miller_rabin(n, 2)) return false;
  if (!detail::strong_lucas_selfridge(n)) return false;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(policy.seed);
  const mpz_class span = n - 3;
  for (unsigned r = 0; r < policy.rounds_above; ++r) {
    mpz_class base = rng.get_z_range(span) + 2;
    if (!detail::miller_rabin(n, base)) return false;
  }
  return true;
}

}  // namespace cmisolate
