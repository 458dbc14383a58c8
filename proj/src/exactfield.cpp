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

#include "cmisolate/exactfield.hpp"

#include <sstream>

#include "cmisolate/arith.hpp"
#include "cmisolate/error.hpp"

namespace cmisolate {

FieldElement::FieldElement(const CmParams& field) : f_(field), x_{0, 0, 0, 0} {}

FieldElement::FieldElement(const CmParams& field, Coords coords) : f_(field), x_(std::move(coords)) {
  for (auto& q : x_) q.canonicalize();
}

FieldElement FieldElement::rational(const CmParams& field, const mpq_class& q) {
  return FieldElement(field, {q, 0, 0, 0});
}
FieldElement FieldElement::sqrt_d(const CmParams& field) { return FieldElement(field, {0, 1, 0, 0}); }
FieldElement FieldElement::eta(const CmParams& field) { return FieldElement(field, {0, 0, 1, 0}); }
FieldElement FieldElement::eta_prime(const CmParams& field) { return FieldElement(field, {0, 0, 0, 1}); }

bool FieldElement::is_rational() const { return x_[1] == 0 && x_[2] == 0 && x_[3] == 0; }
bool FieldElement::is_zero() const { return is_rational() && x_[0] == 0; }

void FieldElement::check_same_field(const FieldElement& y) const {
  if (!(f_ == y.f_)) throw InvalidArgument("field elements belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& y) const {
  check_same_field(y);
  return FieldElement(f_, {x_[0] + y.x_[0], x_[1] + y.x_[1], x_[2] + y.x_[2], x_[3] + y.x_[3]});
}

FieldElement FieldElement::operator-(const FieldElement& y) const {
  check_same_field(y);
  return FieldElement(f_, {x_[0] - y.x_[0], x_[1] - y.x_[1], x_[2] - y.x_[2], x_[3] - y.x_[3]});
}

FieldElement FieldElement::operator-() const { return FieldElement(f_, {-x_[0], -x_[1], -x_[2], -x_[3]}); }

FieldElement FieldElement::scaled(const mpq_class& q) const {
  return FieldElement(f_, {q * x_[0], q * x_[1], q * x_[2], q * x_[3]});
}

FieldElement FieldElement::operator*(const FieldElement& y) const {
  check_same_field(y);
  const mpq_class d = f_.d, b = f_.b, c = f_.c;
  const mpq_class& a = d;
  const auto& x = x_;
  const auto& z = y.x_;
  Coords r;
  r[0] = x[0] * z[0] + d * x[1] * z[1] - a * (x[2] * z[2] + x[3] * z[3]);
  r[1] = x[0] * z[1] + x[1] * z[0] - b * x[2] * z[2] + b * x[3] * z[3] - c * (x[2] * z[3] + x[3] * z[2]);
  r[2] = x[0] * z[2] + x[2] * z[0] + b * (x[1] * z[2] + x[2] * z[1]) + c * (x[1] * z[3] + x[3] * z[1]);
  r[3] = x[0] * z[3] + x[3] * z[0] + c * (x[1] * z[2] + x[2] * z[1]) - b * (x[1] * z[3] + x[3] * z[1]);
  return FieldElement(f_, std::move(r));
}

bool FieldElement::operator==(const FieldElement& y) const { return f_ == y.f_ && x_ == y.x_; }

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << "(" << x_[0].get_str() << ", " << x_[1].get_str() << ", " << x_[2].get_str() << ", "
     << x_[3].get_str() << ")";
  return os.str();
}

FieldElement element_mul(const FieldElement& x, const FieldElement& y) { return x * y; }

FieldElement conjugate(const FieldElement& x, Galois g) {
  const auto& v = x.coords();
  switch (g) {
    case Galois::Identity:
      return x;
    case Galois::Sigma:
      return FieldElement(x.field(), {v[0], -v[1], -v[3], v[2]});
    case Galois::Rho:
      return FieldElement(x.field(), {v[0], v[1], -v[2], -v[3]});
    case Galois::SigmaRho:
      return FieldElement(x.field(), {v[0], -v[1], v[3], -v[2]});
  }
  throw InvalidArgument("unknown Galois element");
}

std::array<FieldElement, 4> conjugates(const FieldElement& x) {
  return {x, conjugate(x, Galois::Sigma), conjugate(x, Galois::Rho), conjugate(x, Galois::SigmaRho)};
}

namespace {

const mpq_class& rational_part(const FieldElement& x, const char* what) {
  if (!x.is_rational()) throw ConsistencyError(std::string(what) + " is not rational");
  return x[0];
}

}  // namespace

mpq_class trace(const FieldElement& x) {
  auto r = conjugates(x);
  return rational_part(r[0] + r[1] + r[2] + r[3], "trace");
}

mpq_class norm(const FieldElement& x) {
  auto r = conjugates(x);
  return rational_part(r[0] * r[1] * r[2] * r[3], "norm");
}

bool Quartic::is_monic_integral() const {
  if (coeff[4] != 1) return false;
  for (const auto& q : coeff) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

std::string Quartic::to_string() const {
  std::ostringstream os;
  os << "X^4";
  const char* pw[] = {"", "X", "X^2", "X^3"};
  for (int i = 3; i >= 0; --i) {
    if (coeff[i] == 0) continue;
    os << (sgn(coeff[i]) < 0 ? " - " : " + ");
    mpq_class m = abs(coeff[i]);
    if (m != 1 || i == 0) os << m.get_str();
    os << pw[i];
  }
  return os.str();
}

Quartic minimal_polynomial(const FieldElement& x) {
  auto r = conjugates(x);
  FieldElement e1 = r[0] + r[1] + r[2] + r[3];
  FieldElement e2 = r[0] * r[1] + r[0] * r[2] + r[0] * r[3] + r[1] * r[2] + r[1] * r[3] + r[2] * r[3];
  FieldElement e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] + r[1] * r[2] * r[3];
  FieldElement e4 = r[0] * r[1] * r[2] * r[3];
  Quartic q;
  q.coeff[4] = 1;
  q.coeff[3] = -rational_part(e1, "e1");
  q.coeff[2] = rational_part(e2, "e2");
  q.coeff[1] = -rational_part(e3, "e3");
  q.coeff[0] = rational_part(e4, "e4");
  return q;
}

mpq_class poly_discriminant(const Quartic& q) {
  const auto& a0 = q.coeff[0];
  const auto& a1 = q.coeff[1];
  const auto& a2 = q.coeff[2];
  const auto& a3 = q.coeff[3];
  const auto& a4 = q.coeff[4];
  if (a4 == 0) throw InvalidArgument("poly_discriminant: degree is not 4");
  mpq_class I = 12 * a4 * a0 - 3 * a3 * a1 + a2 * a2;
  mpq_class J = 72 * a4 * a2 * a0 + 9 * a3 * a2 * a1 - 27 * a4 * a1 * a1 - 27 * a0 * a3 * a3 -
                2 * a2 * a2 * a2;
  mpq_class disc = (4 * I * I * I - J * J) / 27;
  disc.canonicalize();
  return disc;
}

std::array<FieldElement, 4> integral_basis_for_sign(const CmParams& f, int eps) {
  const mpq_class h(1, 2), q(1, 4), e(eps, 4);
  return {FieldElement(f, {1, 0, 0, 0}), FieldElement(f, {h, h, 0, 0}), FieldElement(f, {q, q, q, e}),
          FieldElement(f, {q, -q, q, -e})};
}

FieldElement CyclicCMField::element(const mpq_class& x0, const mpq_class& x1, const mpq_class& x2,
                                    const mpq_class& x3) const {
  return FieldElement(params(), {x0, x1, x2, x3});
}

std::array<FieldElement, 4> CyclicCMField::integral_basis() const {
  return integral_basis_for_sign(params(), eps_basis);
}

CyclicCMField make_cyclic_field(std::int64_t d, std::int64_t b, std::int64_t c,
                                std::optional<std::int64_t> class_number) {
  constexpr std::int64_t kMax = std::int64_t{1} << 30;
  if (d <= 0 || b <= 0 || c <= 0) throw FieldError("d, b, c must be positive");
  if (b >= kMax || c >= kMax) throw FieldError("b, c must be below 2^30");
  if (d != b * b + c * c) throw FieldError("d != b^2 + c^2");
  if (d % 8 != 5) throw FieldError("d must be 5 mod 8, got " + std::to_string(d % 8) + " mod 8");
  if (b % 4 != 2) throw FieldError("b must be 2 mod 4");
  if (!is_squarefree(d)) throw FieldError("d must be square-free");
  if (class_number && *class_number <= 0) throw FieldError("class number must be positive");

  const CmParams params{d, b, c};
  int eps = 0;
  for (int s : {1, -1}) {
    bool ok = true;
    for (const auto& w : integral_basis_for_sign(params, s)) {
      if (!minimal_polynomial(w).is_monic_integral()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (eps != 0) throw ConsistencyError("both basis signs are integral");
      eps = s;
    }
  }
  if (eps == 0) throw FieldError("no sign makes the candidate basis integral");

  CyclicCMField f;
  f.d = d;
  f.b = b;
  f.c = c;
  f.a = d;
  f.eps_basis = eps;
  f.class_number = class_number;
  f.disc = mpz_class(d) * d * d;
  f.no_prime_index = c % 3 == 0;
  return f;
}

bool is_preset_name(const std::string& name) { return name == "zeta5" || name == "f29" || name == "f37"; }

CyclicCMField preset_field(const std::string& name) {
  CyclicCMField f;
  if (name == "zeta5") {
    f = make_cyclic_field(5, 2, 1, 1);
  } else if (name == "f29") {
    f = make_cyclic_field(29, 2, 5);
  } else if (name == "f37") {
    f = make_cyclic_field(37, 6, 1);
  } else {
    throw InvalidArgument("unknown preset '" + name + "' (expected zeta5, f29 or f37)");
  }
  f.name = name;
  return f;
}

std::string galois_name(Galois g) {
  switch (g) {
    case Galois::Identity:
      return "id";
    case Galois::Sigma:
      return "sigma";
    case Galois::Rho:
      return "rho";
    case Galois::SigmaRho:
      return "sigma*rho";
  }
  return "?";
}

}  // namespace cmisolate
