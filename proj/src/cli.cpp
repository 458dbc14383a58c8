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

#include "cmisolate/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cmisolate/arith.hpp"
#include "cmisolate/error.hpp"
#include "cmisolate/nonnormal.hpp"
#include "cmisolate/search.hpp"
#include "cmisolate/splitting.hpp"
#include "cmisolate/weilnum.hpp"

namespace cmisolate {

namespace {

double round_to(double x, int decimals) {
  const double s = std::pow(10.0, decimals);
  return std::round(x * s) / s;
}

ojson field_json(const CyclicCMField& f) {
  ojson j;
  j["d"] = f.d;
  j["b"] = f.b;
  j["c"] = f.c;
  return j;
}

PredictionConfig prediction_config(const RunConfig& cfg, PredictionMode mode) {
  PredictionConfig pc;
  pc.mode = mode;
  pc.z_max = cfg.z_max;
  pc.min_p = cfg.min_p;
  pc.min_I = cfg.min_I;
  pc.grid = cfg.grid;
  pc.threads = cfg.threads;
  return pc;
}

std::vector<std::int64_t> bounds_or_default(const RunConfig& cfg) {
  if (!cfg.bounds.empty()) return cfg.bounds;
  return {200, 400, 600, 800, 1000, 1200};
}

Report cmd_field_validate(const RunConfig& cfg) {
  const CyclicCMField f = cfg.field();
  Report r;
  r.field = field_json(f);
  r.field["a"] = f.a;
  r.field["disc"] = f.disc.get_str();
  r.field["eps_basis"] = f.eps_basis;
  r.field["class_number"] = f.class_number ? ojson(*f.class_number) : ojson(nullptr);
  r.field["flags"] = f.no_prime_index ? "no prime index (3|c)" : "none";
  for (std::uint32_t l : sieve_primes(99)) {
    ojson row;
    row["l"] = l;
    const mpq_class cl = correction_factor(f, l);
    row["class"] = l == 2 ? "dyadic" : splitting_class_name(classify_prime(f, l));
    row["c_l"] = cl.get_str();
    row["c_l_value"] = round_to(cl.get_d(), 9);
    r.rows.push_back(row);
  }
  return r;
}

Report cmd_field_nonnormal(const RunConfig& cfg) {
  if (cfg.nn_a.empty() || cfg.nn_b.empty() || cfg.nn_d.empty()) {
    throw InvalidArgument("field nonnormal needs --a, --b and --d");
  }
  const NonNormalCMField f = make_nonnormal_field(parse_mpz(cfg.nn_a), parse_mpz(cfg.nn_b), parse_mpz(cfg.nn_d));
  const SubfieldInventory inv = nonnormal_subfields(f);
  Report r;
  r.field["a"] = f.a.get_str();
  r.field["b"] = f.b.get_str();
  r.field["c"] = nullptr;
  r.field["d"] = f.d.get_str();
  r.field["delta"] = f.delta.get_str();
  r.field["reflex0"] = f.reflex0.get_str();
  auto add = [&](const std::string& name, const std::string& value) {
    ojson row;
    row["subfield"] = name;
    row["value"] = value;
    r.rows.push_back(row);
  };
  add("real quadratic", "Q(sqrt(" + inv.real_quadratic[0].get_str() + "))");
  add("real quadratic", "Q(sqrt(" + inv.real_quadratic[1].get_str() + "))");
  add("real quadratic", "Q(sqrt(" + inv.real_quadratic[2].get_str() + "))");
  add("L0", "Q(sqrt(" + inv.l0[0].get_str() + "), sqrt(" + inv.l0[1].get_str() + "))");
  add("K1", inv.k1.to_string());
  add("K2", inv.k2.to_string());
  add("K1 reflex", inv.k1r.to_string());
  add("K2 reflex", inv.k2r.to_string());
  const bool ok = nonnormal_factorization_check(2 * f.a, f.delta);
  add("factorization X^4+" + mpz_class(2 * f.a).get_str() + "X^2+" + f.delta.get_str(), ok ? "verified" : "FAILED");
  return r;
}

Report cmd_search(const RunConfig& cfg) {
  const CyclicCMField f = cfg.field();
  Report r;
  r.field = field_json(f);
  const auto bounds = bounds_or_default(cfg);
  r.params["bounds"] = bounds;
  r.params["grid"] = grid_name(cfg.grid);
  std::optional<Predictor> pred;
  if (cfg.with_prediction) {
    r.params["mode"] = mode_name(*cfg.with_prediction);
    r.params["z_max"] = cfg.z_max;
    pred.emplace(f, prediction_config(cfg, *cfg.with_prediction));
  }
  for (std::int64_t bound : bounds) {
    const SearchReport s = count_prime_pairs(f, bound, cfg.grid, cfg.threads);
    ojson row;
    row["bound"] = bound;
    row["actual"] = s.count;
    row["convention"] = s.convention();
    if (pred) {
      const CountPrediction cp = predict_count(*pred, f, bound);
      row["predicted"] = cp.rounded;
      row["predicted_raw"] = static_cast<double>(cp.value);
      row["discrepancy"] =
          s.count ? ojson(round_to(static_cast<double>(cp.rounded) / static_cast<double>(s.count) - 1, 5)) : ojson(nullptr);
    }
    r.rows.push_back(row);
  }
  return r;
}

Report cmd_frequency(const RunConfig& cfg) {
  const CyclicCMField f = cfg.field();
  Report r;
  r.field = field_json(f);
  r.params["lo"] = cfg.lo;
  r.params["hi"] = cfg.hi;
  std::vector<std::uint64_t> ls = cfg.ls;
  if (ls.empty()) {
    for (std::uint32_t l : sieve_primes(139)) {
      if (l != 2) ls.push_back(l);
    }
  }
  for (std::uint64_t l : ls) {
    const FrequencyResult fr = empirical_frequency(f, l, cfg.lo, cfg.hi);
    const mpq_class pred = prob_neither(f, l);
    ojson row;
    row["l"] = l;
    row["class"] = splitting_class_name(classify_prime(f, l));
    row["actual"] = round_to(fr.frequency, 6);
    row["predicted"] = round_to(pred.get_d(), 9);
    row["predicted_num"] = pred.get_num().get_str();
    row["predicted_den"] = pred.get_den().get_str();
    row["good"] = fr.good.get_str();
    row["total"] = fr.total.get_str();
    r.rows.push_back(row);
  }
  return r;
}

Report cmd_constant(const RunConfig& cfg) {
  const CyclicCMField f = cfg.field();
  Report r;
  r.field = field_json(f);
  std::vector<std::uint64_t> zs = cfg.zs;
  if (zs.empty()) zs = {100, 1000, 10000, 100000, 1000000};
  r.params["z"] = zs;
  for (std::uint64_t z : zs) {
    const ConstantResult c = correction_constant(f, z);
    ojson row;
    row["z"] = z;
    row["restricted"] = static_cast<double>(c.restricted);
    row["full"] = static_cast<double>(c.value);
    row["prefactor"] = static_cast<double>(c.prefactor);
    row["diverges_to_zero"] = c.diverges_to_zero;
    r.rows.push_back(row);
  }
  return r;
}

Report cmd_predict(const RunConfig& cfg) {
  const CyclicCMField f = cfg.field();
  Report r;
  r.field = field_json(f);
  const auto bounds = bounds_or_default(cfg);
  r.params["bounds"] = bounds;
  r.params["mode"] = mode_name(cfg.mode);
  r.params["z_max"] = cfg.z_max;
  r.params["min_p"] = cfg.min_p;
  r.params["min_I"] = cfg.min_I;
  r.params["grid"] = grid_name(cfg.grid);
  const Predictor pred(f, prediction_config(cfg, cfg.mode));
  for (std::int64_t bound : bounds) {
    const CountPrediction cp = predict_count(pred, f, bound);
    ojson row;
    row["bound"] = bound;
    row["predicted"] = cp.rounded;
    row["predicted_raw"] = static_cast<double>(cp.value);
    if (cfg.with_actual) {
      const SearchReport s = count_prime_pairs(f, bound, cfg.grid, cfg.threads);
      row["actual"] = s.count;
      row["discrepancy"] =
          s.count ? ojson(round_to(static_cast<double>(cp.rounded) / static_cast<double>(s.count) - 1, 5)) : ojson(nullptr);
    }
    r.rows.push_back(row);
  }
  return r;
}

Report cmd_find(const RunConfig& cfg) {
  const CyclicCMField f = cfg.field();
  FindConfig fc;
  fc.target_p_bits = cfg.target_bits;
  fc.large_prime_bits = cfg.large_bits;
  fc.seed = cfg.seed.value_or(1);
  fc.max_attempts = cfg.max_attempts;
  fc.smooth_bound = cfg.smooth_bound;
  Report r;
  r.field = field_json(f);
  r.params["target_bits"] = cfg.target_bits;
  r.params["large_bits"] = cfg.large_bits;
  r.params["seed"] = fc.seed;
  r.params["max_attempts"] = cfg.max_attempts;
  r.meta.seed = fc.seed;
  const FindResult res = find_isolated(f, fc);
  const WeilCandidate& w = res.candidate;
  ojson row;
  row["C"] = w.C.get_str();
  row["D"] = w.D.get_str();
  row["A"] = w.A.get_str();
  row["B"] = w.B.get_str();
  row["p"] = w.p.get_str();
  row["I"] = w.I.get_str();
  row["p_bits"] = mpz_sizeinbase(w.p.get_mpz_t(), 2);
  row["I_bits"] = mpz_sizeinbase(w.I.get_mpz_t(), 2);
  row["class"] = res.isolation.tag_name();
  row["attempts"] = res.attempts;
  r.rows.push_back(row);
  return r;
}

Report cmd_elliptic(const RunConfig& cfg) {
  EllipticConfig ec;
  ec.d = cfg.ell_d;
  ec.k = cfg.k;
  ec.seed = cfg.seed;
  ec.experimental = cfg.experimental;
  ec.max_attempts = cfg.max_attempts;
  Report r;
  r.field["d"] = cfg.ell_d;
  r.field["b"] = nullptr;
  r.field["c"] = nullptr;
  r.params["k"] = cfg.k;
  r.params["mode"] = cfg.seed ? "random" : "scan";
  r.params["experimental"] = cfg.experimental;
  r.meta.seed = cfg.seed;
  const EllipticHit h = elliptic_analogue_search(ec);
  ojson row;
  row["B"] = h.B.get_str();
  row["A"] = h.A.get_str();
  row["p"] = h.p.get_str();
  row["n"] = h.n.get_str();
  row["attempts"] = h.attempts;
  r.rows.push_back(row);
  return r;
}

}  // namespace

CyclicCMField RunConfig::field() const {
  const bool explicit_field = d || b || c;
  if (preset && explicit_field) throw InvalidArgument("give either --preset or --d/--b/--c, not both");
  if (preset) {
    CyclicCMField f = preset_field(*preset);
    if (class_number) f.class_number = class_number;
    return f;
  }
  if (!(d && b && c)) throw InvalidArgument("a field needs --preset or all of --d, --b, --c");
  return make_cyclic_field(*d, *b, *c, class_number);
}

Report execute(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  if (cfg.command == "field validate") {
    r = cmd_field_validate(cfg);
  } else if (cfg.command == "field nonnormal") {
    r = cmd_field_nonnormal(cfg);
  } else if (cfg.command == "search") {
    r = cmd_search(cfg);
  } else if (cfg.command == "frequency") {
    r = cmd_frequency(cfg);
  } else if (cfg.command == "constant") {
    r = cmd_constant(cfg);
  } else if (cfg.command == "predict") {
    r = cmd_predict(cfg);
  } else if (cfg.command == "find") {
    r = cmd_find(cfg);
  } else if (cfg.command == "elliptic") {
    r = cmd_elliptic(cfg);
  } else {
    throw InvalidArgument("unknown command '" + cfg.command + "'");
  }
  r.command = cfg.command;
  r.meta.threads = resolve_threads(cfg.threads);
  r.meta.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string render(const Report& r, const std::string& format) {
  if (format == "markdown") return to_markdown(r);
  if (format == "csv") return to_csv(r);
  if (format == "json") return to_json(r);
  throw InvalidArgument("unknown format '" + format + "'");
}

namespace {

void add_field_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--preset", cfg.preset, "Named field: zeta5, f29, f37");
  app->add_option("--d", cfg.d, "Field parameter d");
  app->add_option("--b", cfg.b, "Field parameter b");
  app->add_option("--c", cfg.c, "Field parameter c");
  app->add_option("--class-number", cfg.class_number, "Externally known class number h(K)");
}

void add_output_options(CLI::App* app, RunConfig& cfg) {
  app->add_option("--format", cfg.format, "markdown, csv or json")
      ->check(CLI::IsMember({"markdown", "csv", "json"}));
  app->add_option("--output,-o", cfg.output, "Write the report to this file");
  app->add_option("--threads", cfg.threads, "Worker threads (0: CM_ISOLATE_THREADS or all cores)");
}

void add_grid_option(CLI::App* app, std::string& grid) {
  app->add_option("--grid", grid, "shifted (odd 3..bound+1) or inclusive (odd 1..bound)")
      ->check(CLI::IsMember({"shifted", "inclusive"}));
}

void error_line(std::ostream& err, const std::string& kind, const std::string& message) {
  ojson j;
  j["error"] = kind;
  j["message"] = message;
  err << j.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string grid = "shifted", mode = "constant", with_prediction;

  CLI::App app{"Isolated genus-2 parameter search and density predictions", "cmisolate"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto* field = app.add_subcommand("field", "Field validation");
  field->require_subcommand(1);
  auto* validate = field->add_subcommand("validate", "Validate a cyclic quartic CM field");
  add_field_options(validate, cfg);
  add_output_options(validate, cfg);
  auto* nonnormal = field->add_subcommand("nonnormal", "Subfields of a non-normal quartic CM field");
  nonnormal->add_option("--a", cfg.nn_a, "a")->required();
  nonnormal->add_option("--b", cfg.nn_b, "b")->required();
  nonnormal->add_option("--d", cfg.nn_d, "d")->required();
  add_output_options(nonnormal, cfg);

  auto* search = app.add_subcommand("search", "Count (C, D) with p and I both prime");
  add_field_options(search, cfg);
  add_output_options(search, cfg);
  search->add_option("--bound", cfg.bounds, "Bounds (repeatable)");
  add_grid_option(search, grid);
  search->add_option("--with-prediction", with_prediction, "Add predicted counts in this mode")
      ->check(CLI::IsMember({"constant", "truncated", "mertens"}));
  search->add_option("--z", cfg.z_max, "Prime cutoff for the constant");

  auto* frequency = app.add_subcommand("frequency", "Frequency of l dividing neither p nor I");
  add_field_options(frequency, cfg);
  add_output_options(frequency, cfg);
  frequency->add_option("--l", cfg.ls, "Odd primes (repeatable)");
  frequency->add_option("--lo", cfg.lo, "Smallest odd C, D");
  frequency->add_option("--hi", cfg.hi, "Largest odd C, D");

  auto* constant = app.add_subcommand("constant", "Correction constant prod c(l)");
  add_field_options(constant, cfg);
  add_output_options(constant, cfg);
  constant->add_option("--z", cfg.zs, "Prime cutoffs (repeatable)");

  auto* predict = app.add_subcommand("predict", "Predicted number of prime pairs");
  add_field_options(predict, cfg);
  add_output_options(predict, cfg);
  predict->add_option("--bound", cfg.bounds, "Bounds (repeatable)");
  predict->add_option("--mode", mode, "constant, truncated or mertens")
      ->check(CLI::IsMember({"constant", "truncated", "mertens"}));
  predict->add_option("--z", cfg.z_max, "Prime cutoff for the constant");
  predict->add_option("--min-p", cfg.min_p, "Skip pairs with p below this");
  predict->add_option("--min-I", cfg.min_I, "Skip pairs with I below this");
  predict->add_flag("--with-actual", cfg.with_actual, "Also count actual pairs");
  add_grid_option(predict, grid);

  auto* find = app.add_subcommand("find", "Search for an isolated candidate");
  add_field_options(find, cfg);
  add_output_options(find, cfg);
  find->add_option("--bits", cfg.target_bits, "Target size of p in bits");
  find->add_option("--large-bits", cfg.large_bits, "Required size of the prime index in bits");
  find->add_option("--seed", cfg.seed, "Sampling seed");
  find->add_option("--max-attempts", cfg.max_attempts, "Attempt cap");
  find->add_option("--smooth-bound", cfg.smooth_bound, "Trial division bound for the cofactor");

  auto* elliptic = app.add_subcommand("elliptic", "Elliptic analogue p = A^2 + d B^2");
  add_output_options(elliptic, cfg);
  elliptic->add_option("--d", cfg.ell_d, "Discriminant parameter (1, or 2 mod 4 with --experimental)");
  elliptic->add_option("--k", cfg.k, "Bit length of B");
  elliptic->add_option("--seed", cfg.seed, "Sampling seed (omit for a deterministic scan)");
  elliptic->add_option("--max-attempts", cfg.max_attempts, "Attempt cap");
  elliptic->add_flag("--experimental", cfg.experimental, "Allow d != 1");

  std::vector<std::string> argv_store = {"cmisolate"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    error_line(err, "config", e.what());
    return kExitInvalidConfig;
  }

  if (validate->parsed()) cfg.command = "field validate";
  else if (nonnormal->parsed()) cfg.command = "field nonnormal";
  else if (search->parsed()) cfg.command = "search";
  else if (frequency->parsed()) cfg.command = "frequency";
  else if (constant->parsed()) cfg.command = "constant";
  else if (predict->parsed()) cfg.command = "predict";
  else if (find->parsed()) cfg.command = "find";
  else if (elliptic->parsed()) cfg.command = "elliptic";

  try {
    cfg.grid = parse_grid(grid);
    cfg.mode = parse_mode(mode);
    if (!with_prediction.empty()) cfg.with_prediction = parse_mode(with_prediction);
    const Report report = execute(cfg);
    const std::string text = render(report, cfg.format);
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      file << text;
      if (!file) {
        error_line(err, "io", "cannot write " + cfg.output);
        return kExitIo;
      }
    }
    return kExitOk;
  } catch (const FieldError& e) {
    error_line(err, "field", e.what());
    return kExitFieldInvalid;
  } catch (const SearchExhausted& e) {
    error_line(err, "search", e.what());
    return kExitSearchExhausted;
  } catch (const InvalidArgument& e) {
    error_line(err, "config", e.what());
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    error_line(err, "internal", e.what());
    return kExitIo;
  }
}

}  // namespace cmisolate
