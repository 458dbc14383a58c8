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

#include "cmisolate/heuristic.hpp"

#include <algorithm>
#include <cmath>

#include "cmisolate/arith.hpp"
#include "cmisolate/error.hpp"
#include "cmisolate/splitting.hpp"
#include "cmisolate/weilnum.hpp"

namespace cmisolate {

namespace {

long double mpz_to_ld(const mpz_class& x) {
  const size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (bits <= 64) {
    mpz_class a = abs(x);
    long double v = static_cast<long double>(static_cast<u64>(mpz_get_ui(a.get_mpz_t())));
    return sgn(x) < 0 ? -v : v;
  }
  const size_t shift = bits - 64;
  mpz_class top = abs(x) >> shift;
  long double v = std::ldexp(static_cast<long double>(static_cast<u64>(mpz_get_ui(top.get_mpz_t()))),
                             static_cast<int>(shift));
  return sgn(x) < 0 ? -v : v;
}

long double factor_ld(const CyclicCMField& f, std::uint64_t l, bool cp) {
  return to_long_double(cp ? cp_factor(f, l) : correction_factor(f, l));
}

std::uint64_t largest_prime_factor(std::int64_t n) {
  std::uint64_t best = 1;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    while (n % q == 0) {
      best = static_cast<std::uint64_t>(q);
      n /= q;
    }
  }
  if (n > 1) best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(n));
  return best;
}

}  // namespace

std::string mode_name(PredictionMode m) {
  switch (m) {
    case PredictionMode::Constant:
      return "constant";
    case PredictionMode::Truncated:
      return "truncated";
    case PredictionMode::Mertens:
      return "mertens";
  }
  return "?";
}

PredictionMode parse_mode(const std::string& s) {
  if (s == "constant") return PredictionMode::Constant;
  if (s == "truncated") return PredictionMode::Truncated;
  if (s == "mertens") return PredictionMode::Mertens;
  throw InvalidArgument("unknown mode '" + s + "' (expected constant, truncated or mertens)");
}

void PredictionConfig::validate() const {
  if (z_max < 100) throw InvalidArgument("z_max must be at least 100");
  if (min_p < 3) throw InvalidArgument("min_p must be at least 3");
  if (min_I < 2) throw InvalidArgument("min_I must be at least 2");
  if (z_max > 0xFFFFFFFFull || mertens_limit > 0xFFFFFFFFull) throw InvalidArgument("prime table limit exceeds 2^32");
}

long double to_long_double(const mpq_class& q) { return mpz_to_ld(q.get_num()) / mpz_to_ld(q.get_den()); }

long double log_mpz(const mpz_class& x) {
  if (sgn(x) <= 0) throw InvalidArgument("log of a non-positive integer");
  const size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (bits <= 64) return std::log(static_cast<long double>(static_cast<u64>(mpz_get_ui(x.get_mpz_t()))));
  const size_t shift = bits - 64;
  mpz_class top = x >> shift;
  return std::log(static_cast<long double>(static_cast<u64>(mpz_get_ui(top.get_mpz_t())))) +
         static_cast<long double>(shift) * std::log(2.0L);
}

void CompensatedSum::add(long double x) {
  long double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

ConstantResult correction_constant(const CyclicCMField& f, std::uint64_t z) {
  if (z < 2) throw InvalidArgument("correction_constant: z must be at least 2");
  ConstantResult out;
  out.z = z;
  for (std::uint32_t l : sieve_primes(z)) {
    const long double cl = factor_ld(f, l, false);
    out.value *= cl;
    if (l == 2) {
      out.prefactor *= cl;
      continue;
    }
    if (l == 3 && cl == 0) out.diverges_to_zero = true;
    const bool special = f.d % l == 0 || f.b % l == 0;
    if (special) {
      out.prefactor *= cl;
      continue;
    }
    const SplittingClass cls = classify_prime(f, l);
    if (cls == SplittingClass::TotallySplit || cls == SplittingClass::Inert) out.restricted *= cl;
  }
  return out;
}

Predictor::Predictor(const CyclicCMField& f, const PredictionConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  const std::uint64_t limit = cfg_.mode == PredictionMode::Mertens ? std::max(cfg_.z_max, cfg_.mertens_limit)
                                                                   : cfg_.z_max;
  primes_ = sieve_primes(limit);
  prefix_c_.reserve(primes_.size() + 1);
  prefix_c_.push_back(1);
  const bool need_cp = cfg_.mode == PredictionMode::Mertens;
  if (need_cp) {
    prefix_cp_.reserve(primes_.size() + 1);
    prefix_cp_.push_back(1);
  }
  for (std::uint32_t l : primes_) {
    prefix_c_.push_back(prefix_c_.back() * factor_ld(f, l, false));
    if (need_cp) prefix_cp_.push_back(prefix_cp_.back() * factor_ld(f, l, true));
  }
  z_count_ = static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), cfg_.z_max) - primes_.begin());
}

std::size_t Predictor::count_upto(long double x, bool strict) const {
  auto it = strict ? std::lower_bound(primes_.begin(), primes_.end(), x,
                                      [](std::uint32_t l, long double v) { return l < v; })
                   : std::upper_bound(primes_.begin(), primes_.end(), x,
                                      [](long double v, std::uint32_t l) { return v < l; });
  return static_cast<std::size_t>(it - primes_.begin());
}

long double Predictor::evaluate(long double p, long double I, long double ln_p, long double ln_I) const {
  (void)p;
  const long double denom = ln_p * ln_I;
  switch (cfg_.mode) {
    case PredictionMode::Constant:
      return prefix_c_[z_count_] / denom;
    case PredictionMode::Truncated:
      return prefix_c_[std::min(count_upto(I, false), z_count_)] / denom;
    case PredictionMode::Mertens: {
      const long double e = std::exp(-static_cast<long double>(cfg_.gamma));
      const std::size_t k1 = count_upto(std::exp(ln_I * e), true);
      const std::size_t k2 = count_upto(std::exp(ln_p * e), true);
      long double value = prefix_c_[k1];
      if (k2 > k1) value *= prefix_cp_[k2] / prefix_cp_[k1];
      return value / denom;
    }
  }
  throw ConsistencyError("unreachable");
}

long double Predictor::probability(const mpz_class& p, const mpz_class& I) const {
  if (p < cfg_.min_p) throw InvalidArgument("p below min_p");
  if (I < cfg_.min_I) throw InvalidArgument("I below min_I");
  return evaluate(mpz_to_ld(p), mpz_to_ld(I), log_mpz(p), log_mpz(I));
}

long double Predictor::probability_u64(std::uint64_t p, std::uint64_t I) const {
  if (p < cfg_.min_p) throw InvalidArgument("p below min_p");
  if (I < cfg_.min_I) throw InvalidArgument("I below min_I");
  const long double pl = static_cast<long double>(p), il = static_cast<long double>(I);
  return evaluate(pl, il, std::log(pl), std::log(il));
}

long double predict_probability(const CyclicCMField& f, const mpz_class& p, const mpz_class& I,
                                const PredictionConfig& cfg) {
  return Predictor(f, cfg).probability(p, I);
}

CountPrediction predict_count(const Predictor& pred, const CyclicCMField& f, std::int64_t bound) {
  if (bound < 3) throw InvalidArgument("predict_count: bound must be at least 3");
  const PredictionConfig& cfg = pred.config();
  const OddRange range = odd_range(bound, cfg.grid);
  const std::int64_t n = range.size();
  std::vector<CompensatedSum> rows(static_cast<size_t>(n));
  std::vector<std::uint64_t> skipped(static_cast<size_t>(n), 0);
  parallel_for(n, cfg.threads, [&](std::int64_t i) {
    const std::int64_t C = range.at(i);
    CompensatedSum acc;
    std::uint64_t skip = 0;
    for (std::int64_t j = 0; j < n; ++j) {
      const std::int64_t D = range.at(j);
      std::uint64_t p, I;
      if (p_index_u64(f, C, D, p, I)) {
        if (p < cfg.min_p || I < cfg.min_I) {
          ++skip;
          continue;
        }
        acc.add(pred.probability_u64(p, I));
      } else {
        const mpz_class pz = p_from_CD(f, C, D), iz = index_from_CD(f, C, D);
        if (pz < cfg.min_p || iz < cfg.min_I) {
          ++skip;
          continue;
        }
        acc.add(pred.probability(pz, iz));
      }
    }
    rows[static_cast<size_t>(i)] = acc;
    skipped[static_cast<size_t>(i)] = skip;
  });
  CompensatedSum total;
  CountPrediction out;
  for (std::int64_t i = 0; i < n; ++i) {
    total.add(rows[static_cast<size_t>(i)]);
    out.skipped += skipped[static_cast<size_t>(i)];
  }
  out.value = total.value();
  out.rounded = std::llround(out.value);
  out.pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  return out;
}

CountPrediction predict_count(const CyclicCMField& f, std::int64_t bound, const PredictionConfig& cfg) {
  return predict_count(Predictor(f, cfg), f, bound);
}

ConvergenceResult cp_product_convergence(const CyclicCMField& f, std::uint64_t z) {
  if (z < 7) throw InvalidArgument("cp_product_convergence: z must be at least 7");
  ConvergenceResult out;
  out.z = z;
  out.start_after = largest_prime_factor(f.d);
  for (std::uint32_t l : sieve_primes(z)) {
    if (l <= out.start_after) continue;
    out.value *= factor_ld(f, l, true);
    out.partials.emplace_back(l, out.value);
  }
  return out;
}

}  // namespace cmisolate
