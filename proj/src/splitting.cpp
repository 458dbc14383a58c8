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

#include "cmisolate/splitting.hpp"

#include "cmisolate/arith.hpp"
#include "cmisolate/error.hpp"
#include "cmisolate/primality.hpp"
#include "cmisolate/weilnum.hpp"

namespace cmisolate {

namespace {

void require_prime(std::uint64_t l, bool allow_two) {
  if (!is_prime_u64(l)) throw InvalidArgument("l = " + std::to_string(l) + " is not prime");
  if (l == 2 && !allow_two) throw InvalidArgument("l must be odd");
}

mpq_class one_minus(std::uint64_t k, std::uint64_t l) { return mpq_class(l - k, l); }

u64 mod_mpz(const mpz_class& x, u64 m) { return mpz_fdiv_ui(x.get_mpz_t(), m); }

}  // namespace

std::string splitting_class_name(SplittingClass s) {
  switch (s) {
    case SplittingClass::TotallySplit:
      return "TotallySplit";
    case SplittingClass::HalfSplit:
      return "HalfSplit";
    case SplittingClass::Inert:
      return "Inert";
    case SplittingClass::Ramified:
      return "Ramified";
  }
  return "?";
}

bool totally_split_with_root(const CyclicCMField& f, std::uint64_t l, std::uint64_t r) {
  const u64 d = mod_reduce(f.d, l), b = mod_reduce(f.b, l), c = mod_reduce(f.c, l);
  if (mulmod(r, r, l) != d) throw InvalidArgument("r is not a square root of d mod l");
  const u64 num = (mulmod(2 * c % l, r, l) + l - 2 * d % l) % l;
  const u64 val = mulmod(num, inv_mod(mulmod(b, b, l), l), l);
  return legendre(val, l) >= 0;
}

SplittingClass classify_prime(const CyclicCMField& f, std::uint64_t l) {
  require_prime(l, false);
  if (f.d % static_cast<i64>(l) == 0) return SplittingClass::Ramified;
  if (f.b % static_cast<i64>(l) == 0) {
    return l % 4 == 1 ? SplittingClass::TotallySplit : SplittingClass::HalfSplit;
  }
  auto r = sqrt_mod(mod_reduce(f.d, l), l);
  if (!r) return SplittingClass::Inert;
  return totally_split_with_root(f, l, *r) ? SplittingClass::TotallySplit : SplittingClass::HalfSplit;
}

mpq_class prob_not_dividing_I(const CyclicCMField& f, std::uint64_t l) {
  switch (classify_prime(f, l)) {
    case SplittingClass::TotallySplit:
    case SplittingClass::HalfSplit: {
      mpq_class q = one_minus(1, l);
      return q * q;
    }
    case SplittingClass::Inert:
      return mpq_class(l * l - 1, l * l);
    case SplittingClass::Ramified:
      return one_minus(1, l);
  }
  throw ConsistencyError("unreachable");
}

mpq_class prob_neither(const CyclicCMField& f, std::uint64_t l) {
  require_prime(l, true);
  if (l == 2) return 1;
  mpq_class q1 = one_minus(1, l), q3 = one_minus(3, l);
  if (l == 3) q3 = 0;
  switch (classify_prime(f, l)) {
    case SplittingClass::TotallySplit:
      return q3 * q3;
    case SplittingClass::HalfSplit:
      return q1 * q1;
    case SplittingClass::Inert:
      return mpq_class(l * l - 1, l * l);
    case SplittingClass::Ramified:
      return q1;
  }
  throw ConsistencyError("unreachable");
}

mpq_class prob_not_dividing_p(const CyclicCMField& f, std::uint64_t l) {
  require_prime(l, true);
  if (l == 2) return 1;
  switch (classify_prime(f, l)) {
    case SplittingClass::TotallySplit: {
      mpq_class q = one_minus(2, l);
      return q * q;
    }
    case SplittingClass::Ramified:
      return one_minus(1, l);
    default:
      return 1;
  }
}

mpq_class correction_factor(const CyclicCMField& f, std::uint64_t l) {
  mpq_class q = one_minus(1, l);
  return prob_neither(f, l) / (q * q);
}

mpq_class cp_factor(const CyclicCMField& f, std::uint64_t l) { return prob_not_dividing_p(f, l) / one_minus(1, l); }

LocalData local_data(const CyclicCMField& f, std::uint64_t l) {
  LocalData out;
  out.l = l;
  out.cls = classify_prime(f, l);
  out.divides_b = f.b % static_cast<i64>(l) == 0;
  out.prob_not_I = prob_not_dividing_I(f, l);
  out.prob_neither = prob_neither(f, l);
  out.prob_not_p = prob_not_dividing_p(f, l);
  out.c_l = correction_factor(f, l);
  out.c_p_l = cp_factor(f, l);
  return out;
}

bool uv_check(const CyclicCMField& f, std::uint64_t l, std::int64_t C, std::int64_t D) {
  require_prime(l, false);
  if (f.b % static_cast<i64>(l) == 0 || f.d % static_cast<i64>(l) == 0) {
    throw InvalidArgument("uv_check: l must not divide b d");
  }
  auto root = sqrt_mod(mod_reduce(f.d, l), l);
  if (!root) throw InvalidArgument("uv_check: d is not a square mod l");
  const u64 r = *root;
  const u64 b = mod_reduce(f.b, l), c = mod_reduce(f.c, l);
  const u64 binv = inv_mod(b, l);
  const u64 e = mulmod((l - c + r) % l, binv, l);
  const u64 e2 = mulmod((2 * l - c - r) % l, binv, l);
  const u64 Cm = mod_reduce(C, l), Dm = mod_reduce(D, l);
  const u64 U = (Cm + l - mulmod(e, Dm, l)) % l;
  const u64 V = (Cm + l - mulmod(e2, Dm, l)) % l;
  const u64 h = mod_reduce(f.b / 2, l);

  const u64 lhs_p = mod_mpz(p_numerator(f, C, D), l);
  const u64 f1 = (mulmod(h, mulmod(U, U, l), l) + mulmod(e, r, l)) % l;
  const u64 f2 = (mulmod(h, mulmod(V, V, l), l) + l - mulmod(e2, r, l)) % l;
  if (lhs_p != mulmod(f1, f2, l)) return false;

  const u64 eight_I = mod_mpz(2 * abs(index_raw(f, C, D)), l);
  const u64 x = mulmod(mulmod(b, e2, l), mulmod((U + l - mulmod(e, V, l)) % l, (U + mulmod(e, V, l)) % l, l), l);
  return eight_I == x || eight_I == (l - x) % l;
}

}  // namespace cmisolate
