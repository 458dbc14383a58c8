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

#include "cmisolate/search.hpp"

#include <chrono>

#include "cmisolate/arith.hpp"
#include "cmisolate/error.hpp"

namespace cmisolate {

std::string SearchReport::convention() const {
  return "odd C,D in [" + std::to_string(range.lo) + "," + std::to_string(range.hi) + "], B=+1, grid=" +
         grid_name(grid);
}

namespace {

// Appends the hits of one row; returns their number.
std::uint64_t scan_row(const CyclicCMField& f, std::int64_t C, const OddRange& cols, std::vector<PairHit>* hits) {
  std::uint64_t count = 0;
  for (std::int64_t j = 0; j < cols.size(); ++j) {
    const std::int64_t D = cols.at(j);
    std::uint64_t p, I;
    bool hit;
    if (p_index_u64(f, C, D, p, I)) {
      hit = is_prime_u64(I) && is_prime_u64(p);
      if (hit && hits) hits->push_back({C, D, mpz_class(static_cast<unsigned long>(p)), mpz_class(static_cast<unsigned long>(I))});
    } else {
      mpz_class pz = p_from_CD(f, C, D), iz = index_from_CD(f, C, D);
      hit = is_probable_prime(iz) && is_probable_prime(pz);
      if (hit && hits) hits->push_back({C, D, pz, iz});
    }
    if (hit) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t count_prime_pairs_in(const CyclicCMField& f, const OddRange& rows, const OddRange& cols,
                                   std::vector<PairHit>* hits) {
  if (rows.lo % 2 == 0 || cols.lo % 2 == 0) throw InvalidArgument("ranges must start at odd values");
  std::uint64_t count = 0;
  for (std::int64_t i = 0; i < rows.size(); ++i) count += scan_row(f, rows.at(i), cols, hits);
  return count;
}

SearchReport count_prime_pairs(const CyclicCMField& f, std::int64_t bound, Grid grid, unsigned threads) {
  if (bound < 3) throw InvalidArgument("count_prime_pairs: bound must be at least 3");
  const auto start = std::chrono::steady_clock::now();
  SearchReport out;
  out.field = f;
  out.bound = bound;
  out.grid = grid;
  out.range = odd_range(bound, grid);
  const std::int64_t n = out.range.size();
  std::vector<std::vector<PairHit>> rows(static_cast<size_t>(n));
  parallel_for(n, threads, [&](std::int64_t i) { scan_row(f, out.range.at(i), out.range, &rows[static_cast<size_t>(i)]); });
  for (auto& r : rows) {
    for (auto& h : r) out.hits.push_back(std::move(h));
  }
  out.count = out.hits.size();
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

FrequencyResult empirical_frequency(const CyclicCMField& f, std::uint64_t l, std::int64_t lo, std::int64_t hi) {
  if (!is_prime_u64(l) || l == 2) throw InvalidArgument("empirical_frequency: l must be an odd prime");
  if (lo % 2 == 0 || hi % 2 == 0 || lo > hi) throw InvalidArgument("empirical_frequency: lo, hi must be odd with lo <= hi");
  if (l > (1u << 16)) throw InvalidArgument("empirical_frequency: l above 65536 is not supported");
  // Number of odd x in [lo, hi] per residue mod l.
  std::vector<mpz_class> cnt(l, 0);
  const std::int64_t n = (hi - lo) / 2 + 1;
  const std::int64_t full = n / static_cast<std::int64_t>(l);
  for (std::uint64_t r = 0; r < l; ++r) cnt[r] = full;
  for (std::int64_t i = full * static_cast<std::int64_t>(l); i < n; ++i) cnt[mod_reduce(lo + 2 * i, l)] += 1;

  const u64 h = mod_reduce(f.b / 2, l), b = mod_reduce(f.b, l), c = mod_reduce(f.c, l), d = mod_reduce(f.d, l);
  FrequencyResult out;
  out.l = l;
  out.lo = lo;
  out.hi = hi;
  out.good = 0;
  for (u64 r = 0; r < l; ++r) {
    if (cnt[r] == 0) continue;
    const u64 r2 = mulmod(r, r, l);
    mpz_class row = 0;
    for (u64 s = 0; s < l; ++s) {
      const u64 s2 = mulmod(s, s, l), rs = mulmod(r, s, l);
      const u64 t = (mulmod(h, r2, l) + mulmod(c, rs, l) + l - mulmod(h, s2, l)) % l;
      const u64 num = (mulmod(t, t, l) + mulmod(d, (r2 + s2 + 1) % l, l)) % l;
      const u64 raw = (mulmod(c, r2, l) + 2 * l - mulmod(2 * b % l, rs, l) - mulmod(c, s2, l)) % l;
      if (num != 0 && raw != 0) row += cnt[s];
    }
    out.good += row * cnt[r];
  }
  out.total = mpz_class(n) * n;
  out.exact = mpq_class(out.good, out.total);
  out.exact.canonicalize();
  out.frequency = out.exact.get_d();
  return out;
}

FindResult find_isolated(const CyclicCMField& f, const FindConfig& cfg) {
  if (f.no_prime_index) throw FieldError("field has 3 | c: no candidate can have prime index");
  if (cfg.target_p_bits < 64) throw InvalidArgument("find_isolated: target_p_bits must be at least 64");
  if (cfg.max_attempts == 0) throw InvalidArgument("find_isolated: max_attempts must be positive");
  const unsigned k = (cfg.target_p_bits + 4) / 4;
  mpz_class threshold;
  mpz_ui_pow_ui(threshold.get_mpz_t(), 2, cfg.large_prime_bits);

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(cfg.seed);
  mpz_class top;
  mpz_ui_pow_ui(top.get_mpz_t(), 2, k - 1);
  auto sample = [&] {
    // odd value in [2^(k-1), 2^k)
    mpz_class x = top + rng.get_z_bits(k - 1);
    mpz_setbit(x.get_mpz_t(), 0);
    return x;
  };

  for (std::uint64_t attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    const mpz_class C = sample();
    const mpz_class D = sample();
    const mpz_class p = p_from_CD(f, C, D);
    if (!is_probable_prime(p, cfg.policy)) continue;
    const mpz_class I = index_from_CD(f, C, D);
    if (I < threshold || !is_probable_prime(I, cfg.policy)) continue;
    FindResult out;
    out.candidate = complete_candidate(f, C, D, 1);
    out.isolation = classify(out.candidate, cfg.large_prime_bits, cfg.smooth_bound, f.class_number);
    out.attempts = attempt;
    out.cd_bits = k;
    return out;
  }
  throw SearchExhausted("find_isolated: no hit within " + std::to_string(cfg.max_attempts) + " attempts");
}

namespace {

void check_elliptic_d(std::int64_t d, bool experimental) {
  if (d == 1) return;
  if (!experimental) throw InvalidArgument("elliptic analogue for d != 1 requires the experimental flag");
  if (d < 2 || !is_squarefree(d)) throw InvalidArgument("d must be a square-free integer >= 1");
  if (d % 4 != 2) throw InvalidArgument("experimental d must be 2 mod 4 (for d = 3 mod 4 every n is even)");
  // p = A^2 + d B^2 prime with 3 not dividing B forces 3 | A, and then 3 | n.
  if (d % 3 == 2) throw InvalidArgument("d = 2 mod 3 puts a factor 3 in every n");
}

// A parity that keeps p = A^2 + d B^2 odd for odd B.
int required_a_parity(std::int64_t d) { return d % 4 == 2 ? 1 : 0; }

}  // namespace

std::optional<EllipticHit> elliptic_analogue_check(std::int64_t d, const mpz_class& A, const mpz_class& B,
                                                   bool experimental) {
  check_elliptic_d(d, experimental);
  if (mpz_odd_p(A.get_mpz_t()) != required_a_parity(d)) {
    throw InvalidArgument(required_a_parity(d) ? "A must be odd for this d" : "A must be even");
  }
  if (sgn(B) == 0) throw InvalidArgument("B must be non-zero");
  const mpz_class p = A * A + d * B * B;
  if (!is_probable_prime(p)) return std::nullopt;
  const mpz_class half = (p + 1) / 2;
  for (const mpz_class& n : {mpz_class(half - A), mpz_class(half + A)}) {
    if (is_probable_prime(n)) return EllipticHit{d, p, n, A, B, 0};
  }
  return std::nullopt;
}

EllipticHit elliptic_analogue_search(const EllipticConfig& cfg) {
  check_elliptic_d(cfg.d, cfg.experimental);
  if (cfg.k < 2 || cfg.k > 4096) throw InvalidArgument("k must be in [2, 4096]");
  const int parity = required_a_parity(cfg.d);
  mpz_class lo, hi;
  mpz_ui_pow_ui(lo.get_mpz_t(), 2, cfg.k - 1);
  mpz_ui_pow_ui(hi.get_mpz_t(), 2, cfg.k);
  std::uint64_t attempts = 0;

  if (!cfg.seed) {
    for (mpz_class B = lo; B < hi; ++B) {
      if (!is_probable_prime(B)) continue;
      for (mpz_class A = parity; A < hi; A += 2) {
        if (++attempts > cfg.max_attempts) throw SearchExhausted("elliptic_analogue_search: attempt cap reached");
        if (auto hit = elliptic_analogue_check(cfg.d, A, B, cfg.experimental)) {
          hit->attempts = attempts;
          return *hit;
        }
      }
    }
    throw SearchExhausted("elliptic_analogue_search: scan exhausted without a hit");
  }

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(*cfg.seed);
  auto random_prime_b = [&] {
    for (int guard = 0; guard < 100000; ++guard) {
      mpz_class B = lo + rng.get_z_bits(cfg.k - 1);
      if (is_probable_prime(B)) return B;
    }
    throw SearchExhausted("elliptic_analogue_search: no k-bit prime found");
  };
  while (attempts < cfg.max_attempts) {
    const mpz_class B = random_prime_b();
    mpz_class A = rng.get_z_bits(cfg.k);
    if (mpz_odd_p(A.get_mpz_t()) != parity) A += 1;
    ++attempts;
    if (auto hit = elliptic_analogue_check(cfg.d, A, B, cfg.experimental)) {
      hit->attempts = attempts;
      return *hit;
    }
  }
  throw SearchExhausted("elliptic_analogue_search: attempt cap reached");
}

}  // namespace cmisolate
