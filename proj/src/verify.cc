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

#include "srdi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "srdi/bh.hpp"
#include "srdi/linf.hpp"
#include "srdi/oracles.hpp"

namespace srdi {
namespace {

bool close(double value, double reference) {
  return std::abs(value - reference) <= kRelativeTol * std::max(1.0, std::abs(reference));
}

std::string describe(std::string_view what, double got, double want) {
  std::ostringstream out;
  out.precision(17);
  out << what << ": solver " << got << ", oracle " << want;
  return out.str();
}

// Bounds, cost and cardinality of a non-infeasible report.
std::string check_report_shape(const ProblemKey& key, const InstanceFile& instance,
                               const ProblemParams& params, const SolveReport<double>& report) {
  const EdgeAttrs<double>& attrs = instance.attrs;
  if (report.weights.size() != attrs.size()) return "weight vector has wrong length";
  for (std::size_t e = 0; e < attrs.size(); ++e) {
    const double x = report.weights[e];
    if (x < attrs.w[e] - ScalarTraits<double>::slack(attrs.w[e]) ||
        x > attrs.u[e] + ScalarTraits<double>::slack(attrs.u[e])) {
      return "edge " + std::to_string(e + 1) + " outside [w, u]";
    }
  }
  const double paths = oracle::srd_by_paths(instance.tree, report.weights);
  if (!close(report.srd_value, paths)) return describe("reported srd vs path sum", report.srd_value, paths);
  const bool linf = key.norm == Norm::kLinf;
  const double cost = linf ? linf_cost(attrs, report.weights) : bh_cost(attrs, report.weights);
  if (linf ? !close(report.cost, cost) : report.cost != cost) {
    return describe("reported cost vs recomputed", report.cost, cost);
  }
  if (params.budget && !is_min_cost(key.problem) &&
      cost > *params.budget + ScalarTraits<double>::slack(*params.budget)) {
    return describe("cost over budget", cost, *params.budget);
  }
  if (has_cardinality(key.problem) &&
      static_cast<long long>(report.modified_edges.size()) > *params.max_edges) {
    return "changes " + std::to_string(report.modified_edges.size()) + " edges, N = " +
           std::to_string(*params.max_edges);
  }
  if (is_min_cost(key.problem) &&
      paths < *params.demand - ScalarTraits<double>::slack(*params.demand)) {
    return describe("srd below demand", paths, *params.demand);
  }
  return {};
}

void corrupt(SolveReport<double>& report) {
  if (report.status == Status::kInfeasible) {
    report.status = Status::kFeasible;
    return;
  }
  report.objective += 1.0;
  report.cost += 1.0;
}

std::string status_mismatch(Status got, Status want) {
  return "status: solver " + std::string(to_string(got)) + ", oracle " +
         std::string(to_string(want));
}

std::string check_max_problem(const ProblemKey& key, const InstanceFile& instance,
                              const ProblemParams& params, const SolveReport<double>& report) {
  const double budget = *params.budget;
  if (report.status != Status::kFeasible) return status_mismatch(report.status, Status::kFeasible);
  if (std::string shape = check_report_shape(key, instance, params, report); !shape.empty()) {
    return shape;
  }
  if (key.norm == Norm::kLinf) {
    if (key.problem == Problem::kSdipt) {
      const auto grid = oracle::grid_sdipt_inf(instance.tree, instance.attrs, budget, kGridSteps);
      if (report.objective < grid.objective - kGridSlack) {
        return describe("srd below grid oracle", report.objective, grid.objective);
      }
      return {};
    }
    const auto brute = oracle::brute_sdiptc_inf(instance.tree, instance.attrs, budget,
                                                static_cast<int>(*params.max_edges));
    if (!close(report.objective, brute.objective)) {
      return describe("srd", report.objective, brute.objective);
    }
    return {};
  }
  oracle::BhParams<double> bh{budget, 0.0, static_cast<int>(params.max_edges.value_or(0))};
  const auto brute = oracle::brute_bh(
      instance.tree, instance.attrs,
      key.problem == Problem::kSdipt ? oracle::BhProblem::kSdipt : oracle::BhProblem::kSdiptc, bh);
  if (!close(report.objective, brute.objective)) {
    return describe("srd", report.objective, brute.objective);
  }
  return {};
}

std::string check_min_problem(const ProblemKey& key, const InstanceFile& instance,
                              const ProblemParams& params, const SolveReport<double>& report,
                              CheckOutcome& outcome) {
  const double demand = *params.demand;
  const double base = oracle::srd_by_paths(instance.tree, instance.attrs.w);
  const double top = oracle::srd_by_paths(instance.tree, instance.attrs.u);

  // Expected status and cost.
  Status want = Status::kFeasible;
  double want_cost = 0;
  if (demand <= base) {
    want = Status::kAlreadySatisfied;
  } else if (key.norm == Norm::kLinf && key.problem == Problem::kMcsdipt) {
    if (demand > top + ScalarTraits<double>::slack(demand)) {
      want = Status::kInfeasible;
    } else {
      want_cost = oracle::parametric_mcsdipt_inf(instance.tree, instance.attrs,
                                                 std::min(demand, top))
                      .objective;
    }
  } else if (key.norm == Norm::kLinf) {
    const auto brute = oracle::brute_mcsdiptc_inf(instance.tree, instance.attrs, demand,
                                                  static_cast<int>(*params.max_edges));
    if (brute.feasible) {
      want_cost = brute.objective;
    } else {
      want = Status::kInfeasible;
    }
  } else {
    oracle::BhParams<double> bh{0.0, demand, static_cast<int>(params.max_edges.value_or(0))};
    const auto brute = oracle::brute_bh(
        instance.tree, instance.attrs,
        key.problem == Problem::kMcsdipt ? oracle::BhProblem::kMcsdipt
                                         : oracle::BhProblem::kMcsdiptc,
        bh);
    if (brute.feasible) {
      want_cost = brute.objective;
    } else {
      want = Status::kInfeasible;
    }
  }

  if (report.status != want) return status_mismatch(report.status, want);
  if (want == Status::kInfeasible) return {};
  if (std::string shape = check_report_shape(key, instance, params, report); !shape.empty()) {
    return shape;
  }
  if (key.norm == Norm::kLinf ? !close(report.cost, want_cost) : report.cost != want_cost) {
    return describe("cost", report.cost, want_cost);
  }
  if (key.norm == Norm::kLinf && key.problem == Problem::kMcsdipt && want == Status::kFeasible) {
    outcome.srd_equality_checked = true;
    const double reached = oracle::srd_by_paths(instance.tree, report.weights);
    if (!close(reached, demand)) return describe("srd at optimum vs D", reached, demand);
  }
  if (key.norm == Norm::kLinf && key.problem == Problem::kMcsdiptc) {
    if (report.iteration_cap_hit) return "iteration cap reached";
    if (!report.cost_trace.empty()) outcome.trace_checked = true;
    for (std::size_t i = 1; i < report.cost_trace.size(); ++i) {
      const double prev = report.cost_trace[i - 1];
      if (report.cost_trace[i] > prev + kTraceSlack * std::max(1.0, std::abs(prev))) {
        return describe("cost trace increases at iteration " + std::to_string(i),
                        report.cost_trace[i], prev);
      }
    }
  }
  return {};
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finaliser over seed + stream * golden ratio.
  std::uint64_t z = seed + (stream + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

InstanceFile verify_instance(std::uint64_t seed, long long trial, int max_n) {
  const std::uint64_t stream = mix_seed(seed, static_cast<std::uint64_t>(trial));
  Draws draws(stream);
  GenConfig gen;
  gen.node_count = 2 + static_cast<int>(draws.below(static_cast<std::uint64_t>(max_n)));
  gen.shape = static_cast<TreeShape>(trial % 4);
  gen.seed = mix_seed(stream, 1);
  InstanceFile instance = generate_instance(gen);
  if (trial % 2 == 0) return instance;

  // Small integers: exact ties in costs, gains and demands.
  EdgeAttrs<double>& attrs = instance.attrs;
  for (std::size_t e = 0; e < attrs.size(); ++e) {
    attrs.w[e] = static_cast<double>(draws.below(6));
    attrs.u[e] = attrs.w[e] + static_cast<double>(draws.below(6));
    attrs.c[e] = 1.0 + static_cast<double>(draws.below(5));
  }
  const LeafCounts leaves = leaf_counts(instance.tree);
  const double base = srd(leaves, attrs.w);
  const double top = srd(leaves, attrs.u);
  instance.params.budget = static_cast<double>(draws.below(7));
  if (trial % 8 == 1) {
    instance.params.demand = top;
  } else if (trial % 8 == 3) {
    instance.params.demand = base;
  } else {
    instance.params.demand =
        base + static_cast<double>(draws.below(static_cast<std::uint64_t>(top - base) + 1));
  }
  instance.params.max_edges =
      1 + static_cast<long long>(draws.below(static_cast<std::uint64_t>(attrs.size())));
  return instance;
}

ProblemParams trial_params(const ProblemKey& key, const ProblemParams& params) {
  ProblemParams adjusted = params;
  if (key == ProblemKey{Problem::kMcsdiptc, Norm::kLinf} && adjusted.max_edges) {
    adjusted.max_edges = std::min(*adjusted.max_edges, kMaxSwapCardinality);
  }
  return adjusted;
}

CheckOutcome check_against_oracle(const ProblemKey& key, const InstanceFile& instance,
                                  bool inject_fault) {
  const ProblemParams params = trial_params(key, instance.params);
  SolveReport<double> report = solve(key, instance.tree, instance.attrs, params);
  if (inject_fault) corrupt(report);
  CheckOutcome outcome;
  outcome.mismatch = is_min_cost(key.problem)
                         ? check_min_problem(key, instance, params, report, outcome)
                         : check_max_problem(key, instance, params, report);
  return outcome;
}

VerifyResult run_verify(const VerifyConfig& config) {
  if (config.trials < 0) throw Error(ErrorCode::kBadConfig, "trials must be nonnegative");
  if (config.max_n < 1 || config.max_n > kMaxOracleEdges) {
    throw Error(ErrorCode::kBadConfig,
                "max-n must be in 1.." + std::to_string(kMaxOracleEdges) + " for the oracles");
  }
  VerifyResult result;
  for (const ProblemKey& key : kAllProblems) {
    if (config.problem && key.problem != *config.problem) continue;
    if (config.norm && key.norm != *config.norm) continue;
    result.tallies.push_back({key, 0, 0});
  }

  for (long long trial = 0; trial < config.trials; ++trial) {
    const InstanceFile instance = verify_instance(config.seed, trial, config.max_n);
    for (ProblemTally& tally : result.tallies) {
      const CheckOutcome outcome = check_against_oracle(tally.key, instance, config.inject_fault);
      ++tally.total;
      result.srd_equality_checks += outcome.srd_equality_checked;
      result.trace_checks += outcome.trace_checked;
      if (outcome.mismatch.empty()) {
        ++tally.agree;
        continue;
      }
      if (result.first_mismatch) continue;
      const std::string name = to_string(tally.key);
      result.first_mismatch = "trial " + std::to_string(trial) + " " + name + ": " + outcome.mismatch;
      if (!config.dump_dir.empty()) {
        InstanceFile dumped{instance.tree, instance.attrs, trial_params(tally.key, instance.params)};
        const auto path =
            config.dump_dir / ("mismatch-" + name + "-trial" + std::to_string(trial) + ".tif");
        save_instance(dumped, path);
        result.dump_path = path;
      }
    }
  }

  std::ostringstream out;
  long long clean = 0;
  for (const ProblemTally& tally : result.tallies) {
    out << "problem " << to_string(tally.key) << " agree " << tally.agree << "/" << tally.total
        << "\n";
    result.agree += tally.agree;
    result.total += tally.total;
    clean += tally.agree == tally.total;
  }
  out << clean << "/" << result.tallies.size() << " problems, " << result.agree << "/"
      << result.total << " agree\n";
  if (result.first_mismatch) out << "first mismatch " << *result.first_mismatch << "\n";
  if (result.dump_path) out << "dumped " << result.dump_path->string() << "\n";
  result.transcript = out.str();
  return result;
}

}  // namespace srdi
