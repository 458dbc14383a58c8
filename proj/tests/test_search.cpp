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

#include "cmisolate/error.hpp"
#include "cmisolate/exactfield.hpp"
#include "cmisolate/primality.hpp"
#include "cmisolate/search.hpp"
#include "cmisolate/weilnum.hpp"
#include "oracles.hpp"

using namespace cmisolate;

TEST_CASE("prime pair count at bound 200") {
  auto z5 = preset_field("zeta5");
  auto r = count_prime_pairs(z5, 200, Grid::Shifted, 1);
  CHECK(r.count == 896);
  CHECK(r.hits.size() == 896);
  CHECK(r.range.lo == 3);
  CHECK(r.range.hi == 201);

  // brute force with independent arithmetic
  std::uint64_t brute = 0;
  for (std::int64_t C = 3; C <= 201; C += 2) {
    for (std::int64_t D = 3; D <= 201; D += 2) {
      mpz_class p16, I4;
      oracle::p_and_I(5, 2, 1, C, D, p16, I4);
      if (oracle::gmp_prime(p16 / 16) && oracle::gmp_prime(I4 / 4)) ++brute;
    }
  }
  CHECK(brute == 896);

  for (const auto& h : r.hits) {
    CHECK(h.p % 5 == 1);
  }
}

TEST_CASE("count is independent of threads and partition") {
  auto f = preset_field("f37");
  auto a = count_prime_pairs(f, 150, Grid::Shifted, 1);
  auto b = count_prime_pairs(f, 150, Grid::Shifted, 6);
  REQUIRE(a.count == b.count);
  REQUIRE(a.hits.size() == b.hits.size());
  for (std::size_t i = 0; i < a.hits.size(); ++i) {
    CHECK(a.hits[i].C == b.hits[i].C);
    CHECK(a.hits[i].D == b.hits[i].D);
    CHECK(a.hits[i].p == b.hits[i].p);
  }

  const OddRange cols = a.range;
  std::uint64_t sum = 0;
  for (std::int64_t lo = cols.lo; lo <= cols.hi; lo += 20) {
    OddRange rows{lo, std::min<std::int64_t>(lo + 18, cols.hi)};
    sum += count_prime_pairs_in(f, rows, cols);
  }
  CHECK(sum == a.count);
}

TEST_CASE("count grows with the bound") {
  auto f = preset_field("f29");
  std::uint64_t prev = 0;
  for (std::int64_t bound : {40, 80, 120, 160}) {
    auto r = count_prime_pairs(f, bound);
    CHECK(r.count >= prev);
    prev = r.count;
  }
  auto inc = count_prime_pairs(f, 41, Grid::Inclusive);
  CHECK(inc.range.lo == 1);
  CHECK(inc.range.hi == 41);
}

TEST_CASE("residue frequency against brute force") {
  for (const char* name : {"zeta5", "f29", "f37"}) {
    auto f = preset_field(name);
    for (std::uint64_t l : {3, 7, 11, 13}) {
      auto r = empirical_frequency(f, l, -31, 47);
      std::uint64_t good = 0, total = 0;
      for (std::int64_t C = -31; C <= 47; C += 2) {
        for (std::int64_t D = -31; D <= 47; D += 2) {
          mpz_class p16, I4;
          oracle::p_and_I(f.d, f.b, f.c, C, D, p16, I4);
          const mpz_class p = p16 / 16, I = I4 / 4;
          ++total;
          if (p % l != 0 && I % l != 0) ++good;
        }
      }
      CHECK(r.total == total);
      CHECK(r.good == good);
    }
  }
  auto z5 = preset_field("zeta5");
  CHECK_THROWS_AS(empirical_frequency(z5, 9, 1, 5), InvalidArgument);
  CHECK_THROWS_AS(empirical_frequency(z5, 2, 1, 5), InvalidArgument);
  CHECK_THROWS_AS(empirical_frequency(z5, 3, 2, 5), InvalidArgument);
}

TEST_CASE("find_isolated") {
  auto z5 = preset_field("zeta5");
  FindConfig cfg;
  cfg.target_p_bits = 80;
  cfg.large_prime_bits = 40;
  cfg.seed = 42;
  auto a = find_isolated(z5, cfg);
  auto b = find_isolated(z5, cfg);
  CHECK(a.candidate.C == b.candidate.C);
  CHECK(a.candidate.D == b.candidate.D);
  CHECK(a.attempts == b.attempts);

  const auto& w = a.candidate;
  CHECK(oracle::gmp_prime(w.p));
  CHECK(oracle::gmp_prime(w.I));
  CHECK(w.p % 5 == 1);
  CHECK(mpz_sizeinbase(w.I.get_mpz_t(), 2) > 40);
  CHECK(a.isolation.tag == IsolationTag::StrictlyIsolated);
  mpz_class p16, I4;
  oracle::p_and_I(5, 2, 1, w.C, w.D, p16, I4);
  CHECK(p16 == 16 * w.p);
  CHECK(I4 == 4 * w.I);
  CHECK(disc_closed_form(w) == disc_from_minimal_polynomial(w));

  cfg.seed = 43;
  auto c = find_isolated(z5, cfg);
  CHECK((c.candidate.C != a.candidate.C || c.candidate.D != a.candidate.D));

  auto bad = make_cyclic_field(13, 2, 3);
  CHECK(bad.no_prime_index);
  CHECK_THROWS_AS(find_isolated(bad, cfg), FieldError);

  cfg.max_attempts = 1;
  cfg.seed = 1;
  bool exhausted = false;
  for (std::uint64_t s = 1; s < 20 && !exhausted; ++s) {
    cfg.seed = s;
    try {
      find_isolated(z5, cfg);
    } catch (const SearchExhausted&) {
      exhausted = true;
    }
  }
  CHECK(exhausted);
}

TEST_CASE("large example primes") {
  const mpz_class p("771091319962693236371145032994729162932757389399122231169290825163207497497840084770171");
  const mpz_class I("2955859292970642142002483626678135540313500021819");
  CHECK(is_probable_prime(p));
  CHECK(is_probable_prime(I));
  CHECK(oracle::gmp_prime(p));
  CHECK(oracle::gmp_prime(I));
  CHECK(p % 5 == 1);
  CHECK(mpz_sizeinbase(I.get_mpz_t(), 2) == 162);
}

TEST_CASE("elliptic analogue") {
  EllipticConfig cfg;
  cfg.k = 4;
  auto h = elliptic_analogue_search(cfg);
  CHECK(h.B == 11);
  CHECK(h.A == 4);
  CHECK(h.p == 137);
  CHECK(h.n == 73);

  CHECK_THROWS_AS(elliptic_analogue_check(1, 3, 11), InvalidArgument);
  CHECK(elliptic_analogue_check(1, 4, 11).has_value());
  CHECK_THROWS_AS(elliptic_analogue_check(2, 3, 11), InvalidArgument);

  cfg.k = 8;
  cfg.seed = 7;
  auto r = elliptic_analogue_search(cfg);
  CHECK(oracle::gmp_prime(r.B));
  CHECK(r.B >= 128);
  CHECK(r.A % 2 == 0);
  CHECK(r.p == r.A * r.A + r.B * r.B);
  CHECK(oracle::gmp_prime(r.p));
  CHECK(oracle::gmp_prime(r.n));
  const mpz_class half = (r.p + 1) / 2;
  CHECK((r.n == half - r.A || r.n == half + r.A));
  auto again = elliptic_analogue_search(cfg);
  CHECK(again.p == r.p);

  EllipticConfig ex;
  ex.d = 6;
  ex.k = 6;
  CHECK_THROWS_AS(elliptic_analogue_search(ex), InvalidArgument);
  ex.experimental = true;
  auto e6 = elliptic_analogue_search(ex);
  CHECK(e6.A % 2 != 0);
  CHECK(e6.p == e6.A * e6.A + 6 * e6.B * e6.B);
  CHECK(oracle::gmp_prime(e6.n));
  for (std::int64_t d : {2, 3, 7, 14}) {
    ex.d = d;
    CHECK_THROWS_AS(elliptic_analogue_search(ex), InvalidArgument);
  }
}
