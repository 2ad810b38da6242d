// Copyright 2026 The srdi Authors
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

// srdi: solve, generate, verify and benchmark SRD interdiction instances.
//
// Exit codes: 0 feasible or already satisfied, 2 infeasible, 1 on errors.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "srdi/bench.hpp"
#include "srdi/instance.hpp"
#include "srdi/problem.hpp"
#include "srdi/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

struct SolveArgs {
  std::string problem;
  std::string norm;
  std::string instance;
  std::optional<double> k;
  std::optional<double> d;
  std::optional<long long> n;
  bool json = false;
  bool weights = false;
};

struct GenArgs {
  int nodes = 0;
  std::uint64_t seed = 0;
  std::string shape = "uniform-random-parent";
  std::string out;
  double w_max = 10;
  double u_slack_max = 10;
  double c_max = 10;
};

struct VerifyArgs {
  long long trials = 0;
  int max_n = 8;
  std::uint64_t seed = 0;
  std::string problem;
  std::string norm;
  std::string dump_dir = ".";
  bool inject_fault = false;
};

struct BenchArgs {
  std::vector<int> sizes = {1000, 5000, 10000, 30000, 50000};
  int reps = 5;
  std::uint64_t seed = 1;
  double min_sample = 0.002;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw srdi::Error(srdi::ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out += ",";
    out += std::to_string(id);
  }
  return out.empty() ? "none" : out;
}

int run_solve(const SolveArgs& args) {
  const auto problem = srdi::parse_problem(args.problem);
  const auto norm = srdi::parse_norm(args.norm);
  if (!problem || !norm) {
    throw srdi::Error(srdi::ErrorCode::kUnknownProblemTag,
                      "unknown problem/norm '" + args.problem + "/" + args.norm + "'");
  }
  const srdi::ProblemKey key{*problem, *norm};
  const std::string text = read_file(args.instance);
  const srdi::InstanceFile instance = srdi::parse_instance(text);
  srdi::ProblemParams params = instance.params;
  if (args.k) params.budget = args.k;
  if (args.d) params.demand = args.d;
  if (args.n) params.max_edges = args.n;

  const auto start = std::chrono::steady_clock::now();
  const srdi::SolveReport<double> report = srdi::solve(key, instance.tree, instance.attrs, params);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const bool infeasible = report.status == srdi::Status::kInfeasible;
  if (args.json) {
    nlohmann::ordered_json out;
    out["problem"] = srdi::to_string(key.problem);
    out["norm"] = srdi::to_string(key.norm);
    out["status"] = srdi::to_string(report.status);
    if (infeasible) {
      out["objective"] = nullptr;
      out["cost"] = nullptr;
      out["srd"] = nullptr;
    } else {
      out["objective"] = report.objective;
      out["cost"] = report.cost;
      out["srd"] = report.srd_value;
    }
    out["modified_edges"] = report.modified_edges;
    out["iterations"] = report.iterations;
    if (report.breakpoint) out["breakpoint"] = *report.breakpoint;
    if (args.weights && !infeasible) out["weights"] = report.weights;
    out["instance_digest"] = srdi::digest(text);
    out["wall_time_seconds"] = seconds;
    std::cout << out.dump() << "\n";
  } else {
    auto number = [&](double v) { return infeasible ? std::string("none") : srdi::format_decimal(v); };
    std::cout << "problem " << srdi::to_string(key.problem) << "\n"
              << "norm " << srdi::to_string(key.norm) << "\n"
              << "status " << srdi::to_string(report.status) << "\n"
              << "objective " << number(report.objective) << "\n"
              << "cost " << number(report.cost) << "\n"
              << "srd " << number(report.srd_value) << "\n"
              << "modified_edges " << join_ids(report.modified_edges) << "\n"
              << "modified_count " << report.modified_edges.size() << "\n"
              << "iterations " << report.iterations << "\n";
    if (report.breakpoint) std::cout << "breakpoint " << *report.breakpoint << "\n";
    if (args.weights && !infeasible) {
      std::cout << "weights";
      for (double x : report.weights) std::cout << " " << srdi::format_decimal(x);
      std::cout << "\n";
    }
    std::cout << "instance_digest " << srdi::digest(text) << "\n"
              << "wall_time_seconds " << srdi::format_decimal(seconds) << "\n";
  }
  return infeasible ? kExitInfeasible : kExitOk;
}

int run_gen(const GenArgs& args) {
  const auto shape = srdi::parse_shape(args.shape);
  if (!shape) throw srdi::Error(srdi::ErrorCode::kBadConfig, "unknown shape '" + args.shape + "'");
  srdi::GenConfig config;
  config.node_count = args.nodes;
  config.seed = args.seed;
  config.shape = *shape;
  config.w_max = args.w_max;
  config.u_slack_max = args.u_slack_max;
  config.c_max = args.c_max;
  const std::string text = srdi::serialize_instance(srdi::generate_instance(config));
  if (args.out.empty()) {
    std::cout << text;
    std::cerr << "digest " << srdi::digest(text) << "\n";
    return kExitOk;
  }
  std::ofstream out(args.out, std::ios::binary);
  if (!out || !(out << text)) {
    throw srdi::Error(srdi::ErrorCode::kIo, "cannot write '" + args.out + "'");
  }
  std::cout << "out " << args.out << "\n"
            << "digest " << srdi::digest(text) << "\n";
  return kExitOk;
}

int run_verify(const VerifyArgs& args) {
  srdi::VerifyConfig config;
  config.trials = args.trials;
  config.max_n = args.max_n;
  config.seed = args.seed;
  config.dump_dir = args.dump_dir;
  config.inject_fault = args.inject_fault;
  if (!args.problem.empty()) {
    config.problem = srdi::parse_problem(args.problem);
    if (!config.problem) {
      throw srdi::Error(srdi::ErrorCode::kUnknownProblemTag, "unknown problem '" + args.problem + "'");
    }
  }
  if (!args.norm.empty()) {
    config.norm = srdi::parse_norm(args.norm);
    if (!config.norm) {
      throw srdi::Error(srdi::ErrorCode::kUnknownProblemTag, "unknown norm '" + args.norm + "'");
    }
  }
  const srdi::VerifyResult result = srdi::run_verify(config);
  std::cout << result.transcript;
  return result.passed() ? kExitOk : kExitError;
}

int run_bench(const BenchArgs& args) {
  srdi::BenchConfig config;
  config.sizes = args.sizes;
  config.reps = args.reps;
  config.seed = args.seed;
  config.min_sample_seconds = args.min_sample;
  std::cerr << "# instances: uniform-random-parent trees, K ~ U(0, max F], D ~ U[w(T), u(T)], "
               "N ~ U{1..n-1}, seed "
            << args.seed << "\n";
  std::cout << srdi::kBenchCsvHeader << "\n";
  srdi::run_bench(config, [](const srdi::BenchRow& row) {
    std::cout << srdi::to_csv_line(row) << "\n" << std::flush;
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SRD interdiction solvers on rooted trees"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("--problem", solve_args.problem, "sdipt|sdiptc|mcsdipt|mcsdiptc")->required();
  solve->add_option("--norm", solve_args.norm, "linf|bh")->required();
  solve->add_option("--instance", solve_args.instance, "Instance file")->required();
  solve->add_option("--k", solve_args.k, "Budget K (overrides the file)");
  solve->add_option("--d", solve_args.d, "Demand D (overrides the file)");
  solve->add_option("--n", solve_args.n, "Edge limit N (overrides the file)");
  solve->add_flag("--json", solve_args.json, "One JSON object instead of key value lines");
  solve->add_flag("--weights", solve_args.weights, "Include the weight vector");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--nodes", gen_args.nodes, "Vertex count")->required();
  gen->add_option("--seed", gen_args.seed, "PRNG seed")->required();
  gen->add_option("--shape", gen_args.shape,
                  "uniform-random-parent|caterpillar|star|binary");
  gen->add_option("--out", gen_args.out, "Output file (stdout if omitted)");
  gen->add_option("--w-max", gen_args.w_max, "w ~ Uniform[0, w-max]");
  gen->add_option("--u-slack-max", gen_args.u_slack_max, "u - w ~ Uniform[0, u-slack-max]");
  gen->add_option("--c-max", gen_args.c_max, "c ~ Uniform(0, c-max]");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Compare solvers with oracles");
  verify->add_option("--trials", verify_args.trials, "Random instances")->required();
  verify->add_option("--max-n", verify_args.max_n, "Largest edge count")->required();
  verify->add_option("--seed", verify_args.seed, "Campaign seed")->required();
  verify->add_option("--problem", verify_args.problem, "Restrict to one problem");
  verify->add_option("--norm", verify_args.norm, "Restrict to one norm");
  verify->add_option("--dump-dir", verify_args.dump_dir, "Where the first mismatch is written");
  verify->add_flag("--inject-fault", verify_args.inject_fault,
                   "Corrupt solver results (harness self-test)");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Time all solvers, CSV on stdout");
  bench->add_option("--sizes", bench_args.sizes, "Vertex counts")->delimiter(',');
  bench->add_option("--reps", bench_args.reps, "Instances per size");
  bench->add_option("--seed", bench_args.seed, "Instance seed");
  bench->add_option("--min-sample", bench_args.min_sample,
                    "Re-run fast solvers until a sample spans this many seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (gen->parsed()) return run_gen(gen_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
