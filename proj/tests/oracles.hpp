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

// Independent reference computations used only by tests.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "cmisolate/exactfield.hpp"

namespace oracle {

// Discriminant via the Sylvester matrix: (-1)^(n(n-1)/2) Res(f, f') / a_n.
inline mpq_class sylvester_discriminant(const std::vector<mpq_class>& coeff_low_to_high) {
  const int n = static_cast<int>(coeff_low_to_high.size()) - 1;
  std::vector<mpq_class> f(coeff_low_to_high.rbegin(), coeff_low_to_high.rend());  // high to low
  std::vector<mpq_class> g;
  for (int i = 0; i < n; ++i) g.push_back(f[i] * (n - i));
  const int m = n - 1;
  const int size = n + m;
  std::vector<std::vector<mpq_class>> M(size, std::vector<mpq_class>(size, 0));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) M[r][r + k] = f[k];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) M[m + r][r + k] = g[k];
  mpq_class det = 1;
  for (int col = 0; col < size; ++col) {
    int piv = -1;
    for (int r = col; r < size; ++r) {
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(M[piv], M[col]);
      det = -det;
    }
    det *= M[col][col];
    for (int r = col + 1; r < size; ++r) {
      if (M[r][col] == 0) continue;
      mpq_class factor = M[r][col] / M[col][col];
      for (int k = col; k < size; ++k) M[r][k] -= factor * M[col][k];
    }
  }
  const int sign_exp = n * (n - 1) / 2;
  mpq_class disc = det / f[0];
  if (sign_exp % 2) disc = -disc;
  return disc;
}

// prod_{i<j} (r_i - r_j)^2 expanded exactly in the field.
inline mpq_class conjugate_product_discriminant(const cmisolate::FieldElement& x) {
  auto r = cmisolate::conjugates(x);
  cmisolate::FieldElement acc = cmisolate::FieldElement::rational(x.field(), 1);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      auto diff = r[i] - r[j];
      acc = acc * diff * diff;
    }
  if (!acc.is_rational()) throw std::logic_error("discriminant product not rational");
  return acc[0];
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

inline bool gmp_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

// For prime conductor d: l splits completely in the cyclic quartic field of
// conductor d iff l is a fourth power residue mod d.
inline bool quartic_residue_split(std::uint64_t l, std::uint64_t d) { return powmod(l % d, (d - 1) / 4, d) == 1; }

// Correction factor written out per splitting class.
enum class Cls { Split, Half, Inert, Ram };
inline mpq_class table_correction(std::uint64_t l, Cls cls, bool divides_b) {
  if (l == 2) return 4;
  const mpq_class lm1(l - 1);
  if (divides_b) {
    if (l % 4 == 1) {
      mpq_class t = 1 - mpq_class(2) / lm1;
      return t * t;
    }
    return 1;
  }
  switch (cls) {
    case Cls::Split: {
      mpq_class t = 1 - mpq_class(2) / lm1;
      return t * t;
    }
    case Cls::Half:
      return 1;
    case Cls::Inert:
      return 1 + mpq_class(2) / lm1;
    case Cls::Ram:
      return 1 + mpq_class(1) / lm1;
  }
  return 0;
}

// p and I from scratch with big integers, no shared code.
inline void p_and_I(std::int64_t d, std::int64_t b, std::int64_t c, const mpz_class& C, const mpz_class& D,
                    mpz_class& p16, mpz_class& I4) {
  mpz_class t = (b / 2) * C * C + c * C * D - (b / 2) * D * D;
  p16 = t * t + d * (C * C + D * D + 1);
  I4 = abs(c * C * C - 2 * b * C * D - c * D * D);
}

inline mpz_class random_odd(std::mt19937_64& rng, int maxabs) {
  std::uniform_int_distribution<int> dist(-maxabs, maxabs);
  int v;
  do {
    v = dist(rng);
  } while (v % 2 == 0);
  return v;
}

}  // namespace oracle
