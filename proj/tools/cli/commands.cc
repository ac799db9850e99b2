// Copyright 2026 The kip Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/generator.h"
#include "json.hpp"
#include "kip/dual.h"
#include "kip/fptas.h"
#include "kip/oracles.h"
#include "kip/parallel.h"
#include "kip/rat.h"

namespace kip::cli {
namespace {

using OrderedJson = nlohmann::ordered_json;

OrderedJson IntJson(const Int& v) {
  if (auto small = ToUint64(v)) return *small;
  return v.get_str();
}

OrderedJson BitsJson(const InterdictionVector& x) {
  OrderedJson bits = OrderedJson::array();
  for (std::size_t i = 0; i < x.size(); ++i) bits.push_back(x[i] ? 1 : 0);
  return bits;
}

OrderedJson DualPointJson(const DualPoint& a) {
  OrderedJson out = OrderedJson::array();
  for (const auto& v : a.alpha) out.push_back(ToString(v));
  return out;
}

std::optional<Rat> ParsePositiveEps(const std::string& text) {
  auto eps = ParseRat(text);
  if (!eps || sgn(*eps) <= 0) return std::nullopt;
  return eps;
}

struct SolveOptions {
  std::string input;
  std::string eps;
  std::string output = "json";
  unsigned workers = 1;
  bool timing = false;
};

struct ExactOptions {
  std::string input;
  unsigned workers = 1;
};

struct OracleOptions {
  std::string input;
  std::size_t max_n = kDefaultOracleMaxN;
};

struct GenOptions {
  std::size_t n = 10;
  std::size_t t = 1;
  std::uint64_t seed = 1;
  std::uint64_t pmax = 100;
  std::uint64_t wmax = 100;
  std::uint64_t cmax = 100;
  std::string budget_frac = "1/2";
  std::string cap_frac = "1/2";
  std::string output = "-";
};

struct BenchOptions {
  std::string dir;
  std::string eps;
  std::string csv = "-";
  unsigned workers = 1;
  std::size_t exact_max_n = 20;
  bool no_timing = false;
};

int CmdSolve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  const auto eps = ParsePositiveEps(opts.eps);
  if (!eps) {
    err << "invalid --eps '" << opts.eps << "': expected a positive decimal or fraction\n";
    return kExitParams;
  }
  const Instance inst = LoadInstance(opts.input);
  const auto start = std::chrono::steady_clock::now();
  const Solution solution = ApproxInterdiction(inst, *eps, opts.workers);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  if (auto problem = CertifySolution(inst, solution); !problem.empty()) {
    err << "certification failed: " << problem << "\n";
    return kExitFailure;
  }
  if (opts.output == "text") {
    out << SolutionToText(solution);
    if (opts.timing) out << "elapsed_ms: " << elapsed_ms << "\n";
  } else {
    out << SolutionToJson(solution, opts.timing, elapsed_ms);
  }
  return kExitOk;
}

int CmdExact(const ExactOptions& opts, std::ostream& out) {
  const Instance inst = LoadInstance(opts.input);
  const Preprocessed pre = Preprocess(inst);
  const DualOptimum best = OptFExact(pre.instance, opts.workers);
  OrderedJson doc;
  doc["opt_f"] = ToString(best.value);
  doc["x"] = BitsJson(pre.Lift(best.x, inst.costs));
  doc["alpha"] = DualPointJson(best.alpha);
  doc["candidates"] = best.candidates;
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int CmdOracle(const OracleOptions& opts, std::ostream& out, std::ostream& err) {
  const Instance inst = LoadInstance(opts.input);
  if (inst.n > opts.max_n) {
    err << "instance has n = " << inst.n << " > --max-n " << opts.max_n << "\n";
    return kExitSize;
  }
  const Preprocessed pre = Preprocess(inst);
  const OracleReport report = RunOracles(pre.instance, opts.max_n);
  OrderedJson doc;
  doc["opt_i"] = IntJson(report.opt_i);
  doc["opt_f"] = ToString(report.opt_f);
  doc["p_star"] = IntJson(report.p_star);
  OrderedJson optimal = OrderedJson::array();
  for (const auto& x : report.optimal) optimal.push_back(BitsJson(pre.Lift(x, inst.costs)));
  doc["optimal_x"] = std::move(optimal);
  out << doc.dump(2) << "\n";
  return kExitOk;
}

int CmdGen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  GeneratorParams params;
  params.n = opts.n;
  params.t = opts.t;
  params.seed = opts.seed;
  params.pmax = opts.pmax;
  params.wmax = opts.wmax;
  params.cmax = opts.cmax;
  const auto budget_frac = ParseRat(opts.budget_frac);
  const auto cap_frac = ParseRat(opts.cap_frac);
  if (!budget_frac || !cap_frac) {
    err << "invalid --budget-frac or --cap-frac\n";
    return kExitParams;
  }
  params.budget_frac = *budget_frac;
  params.cap_frac = *cap_frac;
  const std::string text = SerializeInstance(GenerateInstance(params));
  if (opts.output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(opts.output, std::ios::binary);
  file << text;
  if (!file) {
    err << "cannot write '" << opts.output << "'\n";
    return kExitFailure;
  }
  return kExitOk;
}

struct BenchRow {
  bool ok = false;
  std::string line;
};

std::string FormatMs(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return s.str();
}

int CmdBench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<Rat> eps_list;
  {
    std::stringstream list(opts.eps);
    std::string item;
    while (std::getline(list, item, ',')) {
      auto eps = ParsePositiveEps(item);
      if (!eps) {
        err << "invalid eps '" << item << "' in --eps\n";
        return kExitParams;
      }
      eps_list.push_back(*eps);
    }
  }
  if (eps_list.empty()) {
    err << "--eps needs at least one value\n";
    return kExitParams;
  }
  std::sort(eps_list.begin(), eps_list.end());
  eps_list.erase(std::unique(eps_list.begin(), eps_list.end()), eps_list.end());

  namespace fs = std::filesystem;
  std::error_code ec;
  std::vector<fs::path> files;
  for (fs::directory_iterator it(opts.dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (it->is_regular_file() && it->path().extension() == ".json") {
      files.push_back(it->path());
    }
  }
  if (ec) {
    err << "cannot list '" << opts.dir << "': " << ec.message() << "\n";
    return kExitFailure;
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });

  // Load every file once; unreadable ones are reported and skipped.
  struct Loaded {
    std::string name;
    Instance inst;
    std::optional<Rat> opt_f;
  };
  std::vector<std::optional<Loaded>> loaded(files.size());
  std::vector<std::string> load_errors(files.size());
  internal::ParallelFor(files.size(), opts.workers, [&](std::size_t k) {
    try {
      Loaded entry{files[k].filename().string(), LoadInstance(files[k].string()), std::nullopt};
      if (entry.inst.n <= opts.exact_max_n) {
        try {
          entry.opt_f = OptFExact(Preprocess(entry.inst).instance).value;
        } catch (const Error&) {
          // Pseudopolynomial reference too large for this instance.
        }
      }
      loaded[k] = std::move(entry);
    } catch (const std::exception& e) {
      load_errors[k] = e.what();
    }
  });

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t k = 0; k < files.size(); ++k) {
    if (!loaded[k]) {
      err << "skipping " << files[k].filename().string() << ": " << load_errors[k] << "\n";
      continue;
    }
    for (std::size_t e = 0; e < eps_list.size(); ++e) jobs.emplace_back(k, e);
  }

  std::vector<BenchRow> rows(jobs.size());
  internal::ParallelFor(jobs.size(), opts.workers, [&](std::size_t r) {
    const Loaded& entry = *loaded[jobs[r].first];
    const Rat& eps = eps_list[jobs[r].second];
    const auto start = std::chrono::steady_clock::now();
    const Solution solution = ApproxOptF(entry.inst, eps);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::string ratio;
    if (entry.opt_f) {
      if (sgn(*entry.opt_f) > 0) {
        ratio = ToString(Rat(solution.f_value / *entry.opt_f));
      } else if (sgn(solution.f_value) == 0) {
        ratio = "1";
      }
    }
    std::ostringstream line;
    line << entry.name << ',' << entry.inst.n << ',' << entry.inst.t << ','
         << ToString(eps) << ',' << ToString(solution.f_value) << ','
         << (entry.opt_f ? ToString(*entry.opt_f) : "") << ',' << ratio << ','
         << solution.stats.dp_states << ',' << (opts.no_timing ? "0" : FormatMs(ms));
    rows[r] = BenchRow{true, line.str()};
  });

  std::ostringstream csv;
  csv << "instance,n,t,eps,f_value,opt_f,ratio,dp_states,wall_ms\n";
  for (const auto& row : rows) csv << row.line << "\n";
  if (opts.csv == "-") {
    out << csv.str();
  } else {
    std::ofstream file(opts.csv, std::ios::binary);
    file << csv.str();
    if (!file) {
      err << "cannot write '" << opts.csv << "'\n";
      return kExitFailure;
    }
  }
  return rows.empty() ? kExitFailure : kExitOk;
}

}  // namespace

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedSyntax:
    case ErrorCode::kSchemaViolation:
    case ErrorCode::kNegativeValue:
      return kExitParse;
    case ErrorCode::kNonpositiveEps:
    case ErrorCode::kInvalidParameter:
      return kExitParams;
    case ErrorCode::kInstanceTooLarge:
    case ErrorCode::kCapacityProductTooLarge:
    case ErrorCode::kValueTooLarge:
      return kExitSize;
    default:
      return kExitFailure;
  }
}

std::string SolutionToJson(const Solution& solution, bool with_timing,
                           double elapsed_ms) {
  OrderedJson doc;
  doc["guarantee"] = std::string(GuaranteeName(solution.guarantee));
  doc["eps"] = ToString(solution.eps);
  doc["eps_internal"] =
      solution.eps_internal ? OrderedJson(ToString(*solution.eps_internal)) : OrderedJson();
  doc["x"] = BitsJson(solution.x);
  doc["interdiction_cost"] = ToString(solution.x.cost());
  doc["f_value"] = ToString(solution.f_value);
  doc["z_star"] = solution.z_star ? OrderedJson(ToString(*solution.z_star)) : OrderedJson();
  doc["alpha_star"] =
      solution.alpha_star ? DualPointJson(*solution.alpha_star) : OrderedJson();
  doc["additive_cert"] = ToString(solution.additive_cert);
  doc["stats"] = {
      {"dp_states", solution.stats.dp_states},
      {"dp_tables", solution.stats.dp_tables},
      {"candidates", solution.stats.candidates},
      {"grid_size", solution.stats.grid_size},
      {"grid_evaluations", solution.stats.grid_evaluations},
  };
  if (with_timing) doc["elapsed_ms"] = elapsed_ms;
  return doc.dump(2) + "\n";
}

std::string SolutionToText(const Solution& solution) {
  std::ostringstream out;
  out << "guarantee: " << GuaranteeName(solution.guarantee) << "\n";
  out << "eps: " << ToString(solution.eps) << "\n";
  out << "interdicted:";
  for (std::size_t i = 0; i < solution.x.size(); ++i) {
    if (solution.x[i]) out << ' ' << i;
  }
  out << "\n";
  out << "interdiction_cost: " << ToString(solution.x.cost()) << "\n";
  out << "f_value: " << ToString(solution.f_value) << "\n";
  if (solution.z_star) out << "z_star: " << ToString(*solution.z_star) << "\n";
  if (solution.alpha_star) {
    out << "alpha_star:";
    for (const auto& v : solution.alpha_star->alpha) out << ' ' << ToString(v);
    out << "\n";
  }
  out << "additive_cert: " << ToString(solution.additive_cert) << "\n";
  out << "dp_states: " << solution.stats.dp_states << "\n";
  return out.str();
}

std::string CertifySolution(const Instance& inst, const Solution& solution) {
  if (solution.x.size() != inst.n) return "interdiction length differs from n";
  if (!solution.x.Feasible(inst.budget)) return "interdiction exceeds the budget";
  const Preprocessed pre = Preprocess(inst);
  std::vector<bool> bits(pre.instance.n);
  for (std::size_t r = 0; r < bits.size(); ++r) bits[r] = solution.x[pre.to_original[r]];
  const Rat f = FExact(pre.instance, InterdictionVector(std::move(bits), pre.instance.costs));
  if (f != solution.f_value) {
    return "reported F(x) = " + ToString(solution.f_value) + " but recomputed " + ToString(f);
  }
  return {};
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Approximation and exact solvers for knapsack interdiction"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Approximate OPT_I via the rounded dual search");
  solve->add_option("--input", solve_opts.input, "Instance JSON file")->required();
  solve->add_option("--eps", solve_opts.eps, "Accuracy, e.g. 0.5 or 1/2")->required();
  solve->add_option("--output", solve_opts.output, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  solve->add_option("--workers", solve_opts.workers, "Threads for candidate evaluation");
  solve->add_flag("--timing", solve_opts.timing, "Include elapsed time");

  ExactOptions exact_opts;
  auto* exact = app.add_subcommand("exact-optf", "Exact OPT_F by dual decomposition");
  exact->add_option("--input", exact_opts.input, "Instance JSON file")->required();
  exact->add_option("--workers", exact_opts.workers, "Threads for candidate evaluation");

  OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "Brute-force OPT_I, OPT_F and p*");
  oracle->add_option("--input", oracle_opts.input, "Instance JSON file")->required();
  oracle->add_option("--max-n", oracle_opts.max_n, "Refuse larger instances");

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", gen_opts.n, "Items");
  gen->add_option("--t", gen_opts.t, "Capacity dimensions");
  gen->add_option("--seed", gen_opts.seed, "PRNG seed");
  gen->add_option("--pmax", gen_opts.pmax, "Largest profit");
  gen->add_option("--wmax", gen_opts.wmax, "Largest weight");
  gen->add_option("--cmax", gen_opts.cmax, "Largest interdiction cost");
  gen->add_option("--budget-frac", gen_opts.budget_frac, "B as a fraction of total cost");
  gen->add_option("--cap-frac", gen_opts.cap_frac, "C_j as a fraction of total weight");
  gen->add_option("--output", gen_opts.output, "Output file, '-' for stdout");

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Run the approximation over a directory");
  bench->add_option("--dir", bench_opts.dir, "Directory of instance JSON files")->required();
  bench->add_option("--eps", bench_opts.eps, "Comma-separated accuracies")->required();
  bench->add_option("--csv", bench_opts.csv, "CSV output file, '-' for stdout");
  bench->add_option("--workers", bench_opts.workers, "Concurrent instances");
  bench->add_option("--exact-max-n", bench_opts.exact_max_n,
                    "Compute exact OPT_F only up to this n");
  bench->add_flag("--no-timing", bench_opts.no_timing, "Write 0 in the wall_ms column");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParams;
  }

  try {
    if (solve->parsed()) return CmdSolve(solve_opts, out, err);
    if (exact->parsed()) return CmdExact(exact_opts, out);
    if (oracle->parsed()) return CmdOracle(oracle_opts, out, err);
    if (gen->parsed()) return CmdGen(gen_opts, out, err);
    if (bench->parsed()) return CmdBench(bench_opts, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace kip::cli
