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

#include <array>
#include <string>

#include <gmpxx.h>

namespace cmisolate {

// Non-normal quartic CM field K = Q(sqrt(-a - b sqrt d)).
struct NonNormalCMField {
  mpz_class a, b, d;
  mpz_class delta;    // a^2 - b^2 d
  mpz_class reflex0;  // square-free kernel of delta; the reflex real subfield is Q(sqrt(reflex0))
  int d_mod4 = 1;     // 1, or 23 for d = 2, 3 mod 4
};

NonNormalCMField make_nonnormal_field(const mpz_class& a, const mpz_class& b, const mpz_class& d);

// Q(sqrt(-a - b sqrt d)) with d square-free.
struct QuarticDescriptor {
  mpz_class a, b, d;
  std::string to_string() const;
};

struct SubfieldInventory {
  // Kernels of d, delta and d * delta (the three real quadratic subfields).
  std::array<mpz_class, 3> real_quadratic;
  // L0 = Q(sqrt d, sqrt delta), given by its two generating kernels.
  std::array<mpz_class, 2> l0;
  QuarticDescriptor k1, k2;    // sqrt(-a -/+ b sqrt d)
  QuarticDescriptor k1r, k2r;  // sqrt(-2a -/+ 2 sqrt delta)
};

SubfieldInventory nonnormal_subfields(const NonNormalCMField& f);

// Expands (X^2 +- sqrt(2 sqrt b - a) X + sqrt b) and (X^2 +- sqrt(-2 sqrt b - a) X - sqrt b)
// in Q(sqrt b)(sqrt(...)) and compares with X^4 + a X^2 + b.
bool nonnormal_factorization_check(const mpz_class& a, const mpz_class& b);

// |C^2 + CD + (1-d)/4 D^2| for d = 1 mod 4, |C^2 - d D^2| otherwise.
mpz_class nonnormal_index_cofactor(const NonNormalCMField& f, const mpz_class& C, const mpz_class& D);

// (pi - pi^rho)(pi^sigma - pi^{sigma rho}) for pi = A + B w + C eta + D w eta, evaluated in
// the embedding eta = i sqrt(a + b sqrt d), sigma(eta) = i sqrt(a - b sqrt d).
mpf_class nonnormal_pi_factor_numeric(const NonNormalCMField& f, const mpz_class& A, const mpz_class& B,
                                      const mpz_class& C, const mpz_class& D, unsigned prec_bits = 256);
// Closed form of the same quantity, -4 sqrt(delta) times the signed cofactor.
mpf_class nonnormal_pi_factor_closed(const NonNormalCMField& f, const mpz_class& C, const mpz_class& D,
                                     unsigned prec_bits = 256);

}  // namespace cmisolate
