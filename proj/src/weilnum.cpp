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

#include "cmisolate/weilnum.hpp"

#include <vector>

#include "cmisolate/arith.hpp"
#include "cmisolate/error.hpp"
#include "cmisolate/primality.hpp"

namespace cmisolate {

namespace {

void require_odd(const mpz_class& C, const mpz_class& D) {
  if (mpz_even_p(C.get_mpz_t()) || mpz_even_p(D.get_mpz_t())) {
    throw InvalidArgument("C and D must both be odd");
  }
}

mpz_class exact_div(const mpz_class& num, unsigned long den, const char* what) {
  if (!mpz_divisible_ui_p(num.get_mpz_t(), den)) {
    throw ConsistencyError(std::string(what) + " is not integral");
  }
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), num.get_mpz_t(), den);
  return q;
}

mpz_class to_integer(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) throw ConsistencyError(std::string(what) + " is not an integer");
  return q.get_num();
}

}  // namespace

FieldElement WeilCandidate::pi() const {
  const mpq_class q(1, 4);
  return field.element(q * A, q * B, q * C, q * D);
}

mpz_class weil_t(const CyclicCMField& f, const mpz_class& C, const mpz_class& D) {
  return (f.b / 2) * C * C + f.c * C * D - (f.b / 2) * D * D;
}

mpz_class p_numerator(const CyclicCMField& f, const mpz_class& C, const mpz_class& D) {
  mpz_class t = weil_t(f, C, D);
  return t * t + f.d * (C * C + D * D + 1);
}

mpz_class index_raw(const CyclicCMField& f, const mpz_class& C, const mpz_class& D) {
  return f.c * C * C - 2 * f.b * C * D - f.c * D * D;
}

mpz_class p_from_CD(const CyclicCMField& f, const mpz_class& C, const mpz_class& D) {
  require_odd(C, D);
  return exact_div(p_numerator(f, C, D), 16, "p");
}

mpz_class index_from_CD(const CyclicCMField& f, const mpz_class& C, const mpz_class& D) {
  require_odd(C, D);
  return exact_div(abs(index_raw(f, C, D)), 4, "I");
}

bool p_index_u64(const CyclicCMField& f, std::int64_t C, std::int64_t D, std::uint64_t& p, std::uint64_t& I) {
  using i128 = __int128;
  const i128 c2 = i128(C) * C, d2 = i128(D) * D, cd = i128(C) * D;
  const i128 t = i128(f.b / 2) * c2 + i128(f.c) * cd - i128(f.b / 2) * d2;
  constexpr i128 kTMax = i128(1) << 62;
  if (t > kTMax || t < -kTMax || c2 > kTMax || d2 > kTMax) return false;
  const u128 num = u128(t * t) + u128(f.d) * u128(c2 + d2 + 1);
  if ((num >> 68) != 0) return false;
  p = static_cast<std::uint64_t>(num >> 4);
  const i128 raw = i128(f.c) * c2 - 2 * i128(f.b) * cd - i128(f.c) * d2;
  I = static_cast<std::uint64_t>((raw < 0 ? -raw : raw) >> 2);
  return true;
}

WeilCandidate complete_candidate(const CyclicCMField& f, const mpz_class& C, const mpz_class& D, int B) {
  if (B != 1 && B != -1) throw InvalidArgument("complete_candidate: B must be +1 or -1");
  require_odd(C, D);
  WeilCandidate w;
  w.field = f;
  w.B = B;
  w.C = C;
  w.D = D;
  w.A = -B * weil_t(f, C, D);
  w.p = p_from_CD(f, C, D);
  w.I = index_from_CD(f, C, D);
  return w;
}

WeilCandidate make_candidate(const CyclicCMField& f, const mpz_class& A, const mpz_class& B, const mpz_class& C,
                             const mpz_class& D) {
  if (A * B != -weil_t(f, C, D)) throw InvalidArgument("(A, B, C, D) violates the Weil relation");
  mpz_class num = A * A + f.d * (B * B + C * C + D * D);
  if (!mpz_divisible_ui_p(num.get_mpz_t(), 16)) throw InvalidArgument("(A, B, C, D) gives non-integral p");
  mpz_class inum = B * B * abs(index_raw(f, C, D));
  if (!mpz_divisible_ui_p(inum.get_mpz_t(), 4)) throw InvalidArgument("(A, B, C, D) gives non-integral I");
  WeilCandidate w;
  w.field = f;
  w.A = A;
  w.B = B;
  w.C = C;
  w.D = D;
  w.p = num / 16;
  w.I = inum / 4;
  return w;
}

mpz_class disc_closed_form(const WeilCandidate& w) {
  const mpz_class raw = index_raw(w.field, w.C, w.D);
  const mpz_class b2 = w.B * w.B;
  const mpz_class num = w.field.disc * w.p * w.p * b2 * b2 * raw * raw;
  return exact_div(num, 16, "closed-form discriminant");
}

mpz_class disc_trace_form(const WeilCandidate& w) {
  const FieldElement pi = w.pi();
  const FieldElement pi_s = conjugate(pi, Galois::Sigma);
  const FieldElement pi_r = conjugate(pi, Galois::Rho);
  const FieldElement pi_sr = conjugate(pi, Galois::SigmaRho);
  const FieldElement pp = pi * pi_r;
  if (!(pp == FieldElement::rational(pi.field(), mpq_class(w.p)))) {
    throw InvalidArgument("disc_trace_form: pi * conj(pi) != p");
  }
  const mpq_class t1 = trace((pi - pi_s) * (pi - pi_sr));
  const mpq_class t2 = trace(pi * pi_s * (pi - pi_r) * (pi_s - pi_sr));
  const mpq_class p(w.p);
  return to_integer(p * p * t1 * t1 * t2, "trace-form discriminant");
}

mpz_class disc_from_minimal_polynomial(const WeilCandidate& w) {
  return to_integer(poly_discriminant(minimal_polynomial(w.pi())), "polynomial discriminant");
}

mpz_class index_of_candidate(const WeilCandidate& w) {
  mpz_class I = exact_div(w.B * w.B * abs(index_raw(w.field, w.C, w.D)), 4, "index");
  if (I == 0) throw InvalidArgument("degenerate candidate: index is zero");
  return I;
}

std::string isolation_tag_name(IsolationTag t) {
  switch (t) {
    case IsolationTag::StrictlyIsolated:
      return "StrictlyIsolated";
    case IsolationTag::Isolated:
      return "Isolated";
    case IsolationTag::AlmostIsolated:
      return "AlmostIsolated";
    case IsolationTag::NotIsolated:
      return "NotIsolated";
  }
  return "?";
}

std::string IsolationClass::tag_name() const { return isolation_tag_name(tag); }

IsolationClass classify_index(const mpz_class& I, unsigned large_prime_bits, std::uint64_t smooth_bound,
                              std::optional<std::int64_t> h_K) {
  IsolationClass out;
  out.large_prime_bits = large_prime_bits;
  out.smooth_bound = smooth_bound;
  if (sgn(I) <= 0) return out;

  mpz_class threshold;
  mpz_ui_pow_ui(threshold.get_mpz_t(), 2, large_prime_bits);
  if (I >= threshold && is_probable_prime(I)) {
    out.tag = h_K == 1 ? IsolationTag::StrictlyIsolated : IsolationTag::Isolated;
    out.l = I;
    return out;
  }

  static const std::vector<std::uint32_t> kDefaultPrimes = sieve_primes(1u << 20);
  std::vector<std::uint32_t> extra;
  const std::vector<std::uint32_t>* primes = &kDefaultPrimes;
  if (smooth_bound > (1u << 20)) {
    extra = sieve_primes(smooth_bound);
    primes = &extra;
  }
  mpz_class rest = I;
  mpz_class m = 1;
  for (std::uint32_t q : *primes) {
    if (q > smooth_bound) break;
    if (mpz_class(q) * q > rest) {
      // rest is 1 or a prime no larger than the smooth bound
      if (rest > 1 && rest <= smooth_bound) {
        m *= rest;
        rest = 1;
      }
      break;
    }
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
      m *= q;
    }
  }
  if (m > 1 && rest >= threshold && is_probable_prime(rest)) {
    out.tag = IsolationTag::AlmostIsolated;
    out.l = rest;
    out.m = m;
  }
  return out;
}

IsolationClass classify(const WeilCandidate& w, unsigned large_prime_bits, std::uint64_t smooth_bound,
                        std::optional<std::int64_t> h_K) {
  return classify_index(w.I, large_prime_bits, smooth_bound, h_K);
}

}  // namespace cmisolate
