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

#include "cmisolate/arith.hpp"

#include <cmath>

#include "cmisolate/error.hpp"

namespace cmisolate {

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) throw InvalidArgument("inv_mod: zero has no inverse");
  return powmod(a, p - 2, p);
}

int legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;

  u64 root;
  if (p % 4 == 3) {
    root = powmod(a, (p + 1) / 4, p);
  } else {
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (legendre(z, p) != -1) ++z;
    u64 m = s;
    u64 c = powmod(z, q, p);
    u64 t = powmod(a, q, p);
    root = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
      u64 i = 0;
      u64 t2 = t;
      while (t2 != 1) {
        t2 = mulmod(t2, t2, p);
        ++i;
      }
      u64 b = c;
      for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
      m = i;
      c = mulmod(b, b, p);
      t = mulmod(t, c, p);
      root = mulmod(root, b, p);
    }
  }
  if (root & 1) root = p - root;
  return root;
}

std::vector<std::uint32_t> sieve_primes(u64 limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  if (limit > 0xFFFFFFFFull) throw InvalidArgument("sieve_primes: limit exceeds 2^32");
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_perfect_square(const mpz_class& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

mpz_class squarefree_kernel(const mpz_class& n) {
  if (sgn(n) <= 0) throw InvalidArgument("squarefree_kernel: argument must be positive");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 63) {
    throw InvalidArgument("squarefree_kernel: argument too large");
  }
  // Trial division to B = 2^21. The remaining cofactor is < 2^63 < B^3, so it is
  // 1, a prime, a product of two distinct primes, or the square of a prime.
  static const std::vector<std::uint32_t> small = sieve_primes(1u << 21);
  mpz_class rest = n;
  mpz_class kernel = 1;
  for (std::uint32_t q : small) {
    if (mpz_class(q) * q > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
      ++e;
    }
    if (e & 1) kernel *= q;
  }
  if (rest > 1 && !is_perfect_square(rest)) kernel *= rest;
  return kernel;
}

bool is_squarefree(const mpz_class& n) { return squarefree_kernel(n) == n; }

std::string to_string(const mpz_class& n) { return n.get_str(); }

std::string to_string(const mpq_class& q) { return q.get_str(); }

mpz_class parse_mpz(const std::string& s) {
  mpz_class out;
  if (s.empty() || out.set_str(s, 10) != 0) throw InvalidArgument("not an integer: '" + s + "'");
  return out;
}

i64 to_i64(const mpz_class& n) {
  if (!n.fits_slong_p()) throw InvalidArgument("integer out of 64-bit range: " + n.get_str());
  return n.get_si();
}

}  // namespace cmisolate
