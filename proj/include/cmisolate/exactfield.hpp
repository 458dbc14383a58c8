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
#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace cmisolate {

// Parameters of K = Q(eta), eta = sqrt(-a - b sqrt(d)), a = d = b^2 + c^2.
struct CmParams {
  std::int64_t d = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  bool operator==(const CmParams&) const = default;
};

// sigma generates Gal(K/Q); rho = sigma^2 is complex conjugation and
// SigmaRho = sigma^3.
enum class Galois { Identity, Sigma, Rho, SigmaRho };

// x0 + x1 sqrt(d) + x2 eta + x3 eta', eta' = sqrt(-a + b sqrt(d)).
// Structure constants: sqrt(d) eta = b eta + c eta', sqrt(d) eta' = c eta - b eta',
// eta eta' = -c sqrt(d). sigma: sqrt(d) -> -sqrt(d), eta -> eta', eta' -> -eta.
class FieldElement {
 public:
  using Coords = std::array<mpq_class, 4>;

  explicit FieldElement(const CmParams& field);
  FieldElement(const CmParams& field, Coords coords);

  static FieldElement rational(const CmParams& field, const mpq_class& q);
  static FieldElement sqrt_d(const CmParams& field);
  static FieldElement eta(const CmParams& field);
  static FieldElement eta_prime(const CmParams& field);

  const Coords& coords() const { return x_; }
  const mpq_class& operator[](size_t i) const { return x_[i]; }
  const CmParams& field() const { return f_; }
  bool is_rational() const;
  bool is_zero() const;

  FieldElement operator+(const FieldElement& y) const;
  FieldElement operator-(const FieldElement& y) const;
  FieldElement operator*(const FieldElement& y) const;
  FieldElement operator-() const;
  FieldElement scaled(const mpq_class& q) const;
  bool operator==(const FieldElement& y) const;

  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& y) const;

  CmParams f_;
  Coords x_;
};

FieldElement element_mul(const FieldElement& x, const FieldElement& y);
FieldElement conjugate(const FieldElement& x, Galois g);
// x, sigma x, rho x, sigma^3 x.
std::array<FieldElement, 4> conjugates(const FieldElement& x);
mpq_class trace(const FieldElement& x);
mpq_class norm(const FieldElement& x);

// coeff[i] multiplies X^i.
struct Quartic {
  std::array<mpq_class, 5> coeff;

  bool is_monic_integral() const;
  bool operator==(const Quartic& o) const { return coeff == o.coeff; }
  std::string to_string() const;
};

// Characteristic polynomial prod (X - x^g); (X - q)^4 for rational q.
Quartic minimal_polynomial(const FieldElement& x);
// Quartic discriminant via the classical invariants, (4 I^3 - J^2) / 27,
// scaled to equal prod_{i<j} (r_i - r_j)^2 for monic input.
mpq_class poly_discriminant(const Quartic& q);

struct CyclicCMField {
  std::int64_t d = 0;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t a = 0;
  int eps_basis = 0;
  std::optional<std::int64_t> class_number;
  mpz_class disc;
  // 3 | c: 3 divides p * I for every odd (C, D), so no candidate has prime index.
  bool no_prime_index = false;
  std::string name;

  CmParams params() const { return {d, b, c}; }
  FieldElement element(const mpq_class& x0, const mpq_class& x1, const mpq_class& x2,
                       const mpq_class& x3) const;
  // 1, (1 + sqrt d)/2, (1 + sqrt d + eta + eps eta')/4, (1 - sqrt d + eta - eps eta')/4.
  std::array<FieldElement, 4> integral_basis() const;
  bool operator==(const CyclicCMField& o) const { return params() == o.params(); }
};

std::array<FieldElement, 4> integral_basis_for_sign(const CmParams& f, int eps);

CyclicCMField make_cyclic_field(std::int64_t d, std::int64_t b, std::int64_t c,
                                std::optional<std::int64_t> class_number = std::nullopt);
// "zeta5" (5,2,1) with h = 1, "f29" (29,2,5), "f37" (37,6,1).
CyclicCMField preset_field(const std::string& name);
bool is_preset_name(const std::string& name);

std::string galois_name(Galois g);

}  // namespace cmisolate
