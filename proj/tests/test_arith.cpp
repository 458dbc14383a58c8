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

#include <doctest.h>

#include <random>

#include "cmisolate/arith.hpp"
#include "cmisolate/error.hpp"
#include "cmisolate/primality.hpp"
#include "oracles.hpp"

using namespace cmisolate;

TEST_CASE("sieve agrees with trial division") {
  auto primes = sieve_primes(20000);
  size_t k = 0;
  for (std::uint64_t n = 0; n <= 20000; ++n) {
    bool is = k < primes.size() && primes[k] == n;
    CHECK(is == oracle::trial_division_prime(n));
    if (is) ++k;
  }
  CHECK(sieve_primes(1).empty());
}

TEST_CASE("sqrt_mod returns the even root") {
  for (std::uint32_t p : sieve_primes(3000)) {
    if (p == 2) continue;
    for (u64 a = 0; a < std::min<u64>(p, 200); ++a) {
      auto r = sqrt_mod(a, p);
      const bool residue = a == 0 || legendre(a, p) == 1;
      REQUIRE(r.has_value() == residue);
      if (r) {
        CHECK(mulmod(*r, *r, p) == a);
        CHECK(*r % 2 == 0);
      }
    }
  }
}

TEST_CASE("square-free kernel") {
  CHECK(squarefree_kernel(217) == 217);
  CHECK(squarefree_kernel(72) == 2);
  CHECK(squarefree_kernel(5 * 5 * 5) == 5);
  CHECK(squarefree_kernel(mpz_class("4611686014132420609")) == 1);  // (2^31 - 1)^2
  CHECK(squarefree_kernel(mpz_class(2147483647) * 2147483629) == mpz_class(2147483647) * 2147483629);
  CHECK_FALSE(is_squarefree(12));
  CHECK(is_squarefree(29));
  CHECK_THROWS_AS(squarefree_kernel(0), InvalidArgument);
}

TEST_CASE("primality small cases") {
  CHECK_FALSE(is_probable_prime(0));
  CHECK_FALSE(is_probable_prime(1));
  CHECK(is_probable_prime(2));
  CHECK(is_probable_prime(3));
  CHECK(is_probable_prime(5));
  CHECK_FALSE(is_probable_prime(15));
  for (u64 n = 0; n < 200000; ++n) REQUIRE(is_prime_u64(n) == oracle::trial_division_prime(n));
}

TEST_CASE("strong pseudoprimes are rejected") {
  // strong pseudoprimes to base 2
  for (u64 n : {2047ull, 3277ull, 4033ull, 4681ull, 8321ull, 3215031751ull, 3825123056546413051ull}) {
    CHECK_FALSE(is_prime_u64(n));
  }
  // Carmichael numbers
  for (u64 n : {561ull, 1105ull, 1729ull, 2465ull, 41041ull}) CHECK_FALSE(is_prime_u64(n));
}

TEST_CASE("strong Lucas test matches known pseudoprimes") {
  for (long n : {5459, 5777, 10877, 16109, 18971, 22499, 24569, 25199, 40309, 58519}) {
    CHECK(detail::strong_lucas_selfridge(n));
    CHECK_FALSE(oracle::trial_division_prime(n));
  }
  for (long n = 3; n < 20000; n += 2) {
    if (oracle::trial_division_prime(n)) REQUIRE(detail::strong_lucas_selfridge(n));
  }
}

TEST_CASE("primality agrees with GMP on random inputs") {
  std::mt19937_64 rng(42);
  gmp_randclass grng(gmp_randinit_mt);
  grng.seed(7);
  for (int i = 0; i < 20000; ++i) {
    u64 n = rng() | 1;
    REQUIRE(is_prime_u64(n) == oracle::gmp_prime(mpz_class(static_cast<unsigned long>(n))));
  }
  int primes = 0;
  for (int i = 0; i < 3000; ++i) {
    mpz_class n = grng.get_z_bits(64 + i % 200);
    mpz_setbit(n.get_mpz_t(), 0);
    bool ours = is_probable_prime(n);
    REQUIRE(ours == oracle::gmp_prime(n));
    primes += ours;
  }
  CHECK(primes > 10);
}

TEST_CASE("known large primes") {
  mpz_class m89;
  mpz_ui_pow_ui(m89.get_mpz_t(), 2, 89);
  m89 -= 1;
  CHECK(is_probable_prime(m89));
  CHECK_FALSE(is_probable_prime(m89 + 2));
  CHECK_FALSE(is_probable_prime(m89 * 6));
  // 2^89 - 1 has no factor below 10^6
  for (std::uint32_t q : sieve_primes(1000000)) REQUIRE_FALSE(mpz_divisible_ui_p(m89.get_mpz_t(), q));
  mpz_class m127;
  mpz_ui_pow_ui(m127.get_mpz_t(), 2, 127);
  CHECK(is_probable_prime(m127 - 1));
  CHECK_FALSE(is_probable_prime((m127 - 1) * (m89)));
}
