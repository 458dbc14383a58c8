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

#include "cmisolate/nonnormal.hpp"

#include <vector>

#include "cmisolate/arith.hpp"
#include "cmisolate/error.hpp"

namespace cmisolate {

NonNormalCMField make_nonnormal_field(const mpz_class& a, const mpz_class& b, const mpz_class& d) {
  if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(d) <= 0) throw FieldError("a, b, d must be positive");
  if (d == 1 || !is_squarefree(d)) throw FieldError("d must be square-free and > 1");
  NonNormalCMField f;
  f.a = a;
  f.b = b;
  f.d = d;
  f.delta = a * a - b * b * d;
  if (sgn(f.delta) <= 0) throw FieldError("a^2 - b^2 d must be positive");
  if (mpz_divisible_p(f.delta.get_mpz_t(), d.get_mpz_t())) {
    mpz_class q = f.delta / d;
    if (is_perfect_square(q)) throw FieldError("a^2 - b^2 d = c^2 d: the field is cyclic");
  }
  if (is_perfect_square(f.delta)) throw FieldError("a^2 - b^2 d is a square: the field is biquadratic");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (!is_squarefree(g)) throw FieldError("gcd(a, b) must be square-free");
  if (mpz_divisible_p(g.get_mpz_t(), d.get_mpz_t())) throw FieldError("d must not divide gcd(a, b)");
  f.reflex0 = squarefree_kernel(f.delta);
  f.d_mod4 = mpz_fdiv_ui(d.get_mpz_t(), 4) == 1 ? 1 : 23;
  return f;
}

std::string QuarticDescriptor::to_string() const {
  std::string s = "Q(sqrt(-" + a.get_str();
  s += sgn(b) < 0 ? "+" : "-";
  mpz_class m = abs(b);
  if (m != 1) s += m.get_str() + "*";
  return s + "sqrt(" + d.get_str() + ")))";
}

SubfieldInventory nonnormal_subfields(const NonNormalCMField& f) {
  SubfieldInventory inv;
  inv.real_quadratic = {f.d, f.reflex0, squarefree_kernel(f.d * f.delta)};
  inv.l0 = {f.d, f.reflex0};
  inv.k1 = {f.a, f.b, f.d};
  inv.k2 = {f.a, -f.b, f.d};
  // sqrt(delta) = s sqrt(reflex0)
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), mpz_class(f.delta / f.reflex0).get_mpz_t());
  inv.k1r = {2 * f.a, 2 * s, f.reflex0};
  inv.k2r = {2 * f.a, -2 * s, f.reflex0};
  return inv;
}

namespace {

// u + v r with r^2 = sq.
template <typename T>
struct Quad {
  T u, v, sq;

  Quad operator+(const Quad& o) const { return {u + o.u, v + o.v, sq}; }
  Quad operator-(const Quad& o) const { return {u - o.u, v - o.v, sq}; }
  Quad operator*(const Quad& o) const { return {u * o.u + v * o.v * sq, u * o.v + v * o.u, sq}; }
  bool operator==(const Quad& o) const { return u == o.u && v == o.v; }
};

using Inner = Quad<mpq_class>;  // Q(sqrt b)
using Outer = Quad<Inner>;      // Q(sqrt b)(sqrt S)

using Poly = std::vector<Outer>;

Poly poly_mul(const Poly& x, const Poly& y, const Outer& zero) {
  Poly out(x.size() + y.size() - 1, zero);
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = 0; j < y.size(); ++j) out[i + j] = out[i + j] + x[i] * y[j];
  }
  return out;
}

bool expands_to(const Poly& product, const mpz_class& a, const mpz_class& b, const Outer& zero) {
  auto constant = [&](const mpq_class& q) {
    Outer o = zero;
    o.u.u = q;
    return o;
  };
  const std::array<Outer, 5> want = {constant(b), zero, constant(a), zero, constant(1)};
  for (size_t i = 0; i < 5; ++i) {
    if (!(product[i] == want[i])) return false;
  }
  return true;
}

// (X^2 + s X + k r)(X^2 - s X + k r), r = sqrt b, s^2 = 2 k r - a.
bool check_one(const mpz_class& a, const mpz_class& b, int k) {
  const mpq_class bq = b;
  const Inner izero{0, 0, bq};
  const Inner s_sq{mpq_class(-a), mpq_class(2 * k), bq};
  const Outer zero{izero, izero, s_sq};
  const Outer one{Inner{1, 0, bq}, izero, s_sq};
  const Outer s{izero, Inner{1, 0, bq}, s_sq};
  const Outer r{Inner{0, k, bq}, izero, s_sq};
  Poly f1 = {r, s, one};
  Poly f2 = {r, zero - s, one};
  return expands_to(poly_mul(f1, f2, zero), a, b, zero);
}

}  // namespace

bool nonnormal_factorization_check(const mpz_class& a, const mpz_class& b) {
  if (sgn(a) <= 0 || sgn(b) <= 0) throw InvalidArgument("factorization check needs a > 0 and b > 0");
  mpz_class disc = a * a - 4 * b;
  if (sgn(disc) <= 0) throw InvalidArgument("factorization check needs a^2 - 4b > 0");
  if (is_perfect_square(disc)) throw InvalidArgument("a^2 - 4b is a square: X^4 + aX^2 + b is reducible");
  return check_one(a, b, 1) && check_one(a, b, -1);
}

namespace {

mpz_class signed_cofactor(const NonNormalCMField& f, const mpz_class& C, const mpz_class& D) {
  if (f.d_mod4 == 1) return C * C + C * D + ((1 - f.d) / 4) * D * D;
  return C * C - f.d * D * D;
}

}  // namespace

mpz_class nonnormal_index_cofactor(const NonNormalCMField& f, const mpz_class& C, const mpz_class& D) {
  return abs(signed_cofactor(f, C, D));
}

namespace {

struct Complex {
  mpf_class re, im;
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
};

}  // namespace

mpf_class nonnormal_pi_factor_numeric(const NonNormalCMField& f, const mpz_class& A, const mpz_class& B,
                                      const mpz_class& C, const mpz_class& D, unsigned prec_bits) {
  const mpf_class zero(0, prec_bits);
  const mpf_class sd = sqrt(mpf_class(f.d, prec_bits));
  mpf_class w(0, prec_bits), w2(0, prec_bits);
  if (f.d_mod4 == 1) {
    w = (1 + sd) / 2;
    w2 = (1 - sd) / 2;
  } else {
    w = sd;
    w2 = -sd;
  }
  const mpf_class e1 = sqrt(mpf_class(f.a + f.b * sd, prec_bits));
  const mpf_class e2 = sqrt(mpf_class(f.a - f.b * sd, prec_bits));
  auto embed = [&](const mpf_class& ww, const mpf_class& ee, int conj) {
    Complex z{mpf_class(A + B * ww, prec_bits), mpf_class((C + D * ww) * ee, prec_bits)};
    if (conj) z.im = -z.im;
    return z;
  };
  const Complex pi = embed(w, e1, 0);
  const Complex pi_rho = embed(w, e1, 1);
  const Complex pi_sigma = embed(w2, e2, 0);
  const Complex pi_sigma_rho = embed(w2, e2, 1);
  const Complex prod = (pi - pi_rho) * (pi_sigma - pi_sigma_rho);
  const mpf_class tol = abs(prod.re) * mpf_class("1e-60", prec_bits) + mpf_class("1e-60", prec_bits);
  if (abs(prod.im) > tol) throw ConsistencyError("non-normal factor has an imaginary part");
  return prod.re;
}

mpf_class nonnormal_pi_factor_closed(const NonNormalCMField& f, const mpz_class& C, const mpz_class& D,
                                     unsigned prec_bits) {
  const mpf_class root = sqrt(mpf_class(f.delta, prec_bits));
  return mpf_class(-4 * root * mpf_class(signed_cofactor(f, C, D), prec_bits), prec_bits);
}

}  // namespace cmisolate
