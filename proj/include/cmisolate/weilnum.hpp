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

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "cmisolate/exactfield.hpp"

namespace cmisolate {

// pi = (A + B sqrt d + C eta + D eta') / 4 with A B = -(b/2) C^2 - c C D + (b/2) D^2,
// 16 p = A^2 + d (B^2 + C^2 + D^2) and I = B^2 |c C^2 - 2 b C D - c D^2| / 4.
struct WeilCandidate {
  CyclicCMField field;
  mpz_class A, B, C, D;
  mpz_class p;
  mpz_class I;

  FieldElement pi() const;
};

// t = (b/2) C^2 + c C D - (b/2) D^2; -t is A when B = 1.
mpz_class weil_t(const CyclicCMField& f, const mpz_class& C, const mpz_class& D);
// 16 p for B = +-1: t^2 + d (C^2 + D^2 + 1).
mpz_class p_numerator(const CyclicCMField& f, const mpz_class& C, const mpz_class& D);
// c C^2 - 2 b C D - c D^2, so that 4 I = |index_raw|.
mpz_class index_raw(const CyclicCMField& f, const mpz_class& C, const mpz_class& D);

mpz_class p_from_CD(const CyclicCMField& f, const mpz_class& C, const mpz_class& D);
mpz_class index_from_CD(const CyclicCMField& f, const mpz_class& C, const mpz_class& D);

// 64-bit fast path; false if an intermediate overflows. C and D must be odd.
bool p_index_u64(const CyclicCMField& f, std::int64_t C, std::int64_t D, std::uint64_t& p, std::uint64_t& I);

WeilCandidate complete_candidate(const CyclicCMField& f, const mpz_class& C, const mpz_class& D, int B = 1);
// General (A, B, C, D); checks the Weil relation and integrality of p.
WeilCandidate make_candidate(const CyclicCMField& f, const mpz_class& A, const mpz_class& B, const mpz_class& C,
                             const mpz_class& D);

mpz_class disc_closed_form(const WeilCandidate& w);
mpz_class disc_trace_form(const WeilCandidate& w);
mpz_class disc_from_minimal_polynomial(const WeilCandidate& w);
mpz_class index_of_candidate(const WeilCandidate& w);

enum class IsolationTag { StrictlyIsolated, Isolated, AlmostIsolated, NotIsolated };

struct IsolationClass {
  IsolationTag tag = IsolationTag::NotIsolated;
  mpz_class l = 0;  // the large prime (Isolated kinds: I itself)
  mpz_class m = 1;  // smooth cofactor
  unsigned large_prime_bits = 80;
  std::uint64_t smooth_bound = 1u << 20;

  std::string tag_name() const;
};

IsolationClass classify_index(const mpz_class& I, unsigned large_prime_bits = 80,
                              std::uint64_t smooth_bound = 1u << 20,
                              std::optional<std::int64_t> h_K = std::nullopt);
IsolationClass classify(const WeilCandidate& w, unsigned large_prime_bits = 80,
                        std::uint64_t smooth_bound = 1u << 20,
                        std::optional<std::int64_t> h_K = std::nullopt);

std::string isolation_tag_name(IsolationTag t);

}  // namespace cmisolate
