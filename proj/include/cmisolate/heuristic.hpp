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
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cmisolate/exactfield.hpp"
#include "cmisolate/grid.hpp"

namespace cmisolate {

enum class PredictionMode { Constant, Truncated, Mertens };

std::string mode_name(PredictionMode m);
PredictionMode parse_mode(const std::string& s);

struct PredictionConfig {
  PredictionMode mode = PredictionMode::Constant;
  std::uint64_t z_max = 1000000;
  double gamma = 0.5772156649015329;
  std::uint64_t min_p = 7;
  std::uint64_t min_I = 2;
  Grid grid = Grid::Shifted;
  // Prime table size for Mertens mode; cutoffs beyond it are clamped.
  std::uint64_t mertens_limit = 1u << 24;
  unsigned threads = 0;

  void validate() const;
};

struct ConstantResult {
  std::uint64_t z = 0;
  // prod_{l <= z} c(l), ascending.
  long double value = 1;
  // Odd l not dividing b d that are totally split or inert. For Q(zeta5) this is
  // the product over l = 1 and l = 2, 3 mod 5.
  long double restricted = 1;
  // 4 * prod_{l | d} c(l) * prod_{odd l | b} c(l), so value = prefactor * restricted.
  long double prefactor = 1;
  // c(3) = 0: 3 splits completely and the product collapses.
  bool diverges_to_zero = false;
};

ConstantResult correction_constant(const CyclicCMField& f, std::uint64_t z);

// Precomputed ascending prefix products of c(l) and c_p(l) for one field.
class Predictor {
 public:
  Predictor(const CyclicCMField& f, const PredictionConfig& cfg);

  // Throws InvalidArgument below min_p / min_I.
  long double probability(const mpz_class& p, const mpz_class& I) const;
  long double probability_u64(std::uint64_t p, std::uint64_t I) const;
  long double constant() const { return prefix_c_.back(); }
  const PredictionConfig& config() const { return cfg_; }

 private:
  long double evaluate(long double p, long double I, long double ln_p, long double ln_I) const;
  // Number of table primes <= x (or < x when strict).
  std::size_t count_upto(long double x, bool strict) const;

  PredictionConfig cfg_;
  std::vector<std::uint32_t> primes_;
  std::vector<long double> prefix_c_;   // prefix_c_[k] = prod over the first k primes
  std::vector<long double> prefix_cp_;
  std::size_t z_count_ = 0;             // primes <= z_max
};

long double predict_probability(const CyclicCMField& f, const mpz_class& p, const mpz_class& I,
                                const PredictionConfig& cfg = {});

struct CountPrediction {
  long double value = 0;
  long long rounded = 0;  // half away from zero
  std::uint64_t pairs = 0;    // grid pairs visited
  std::uint64_t skipped = 0;  // below min_p or min_I
};

CountPrediction predict_count(const CyclicCMField& f, std::int64_t bound, const PredictionConfig& cfg = {});
CountPrediction predict_count(const Predictor& pred, const CyclicCMField& f, std::int64_t bound);

struct ConvergenceResult {
  std::uint64_t z = 0;
  std::uint64_t start_after = 0;  // largest ramified prime
  long double value = 1;
  std::vector<std::pair<std::uint64_t, long double>> partials;
};

ConvergenceResult cp_product_convergence(const CyclicCMField& f, std::uint64_t z);

// Neumaier compensated sum.
class CompensatedSum {
 public:
  void add(long double x);
  void add(const CompensatedSum& o) {
    add(o.sum_);
    add(o.comp_);
  }
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0;
  long double comp_ = 0;
};

long double to_long_double(const mpq_class& q);
long double log_mpz(const mpz_class& x);

}  // namespace cmisolate
