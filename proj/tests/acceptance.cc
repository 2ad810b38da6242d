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

// Acceptance gate: one PASS/FAIL line per criterion. Usage:
//   srdi_acceptance <path to the srdi binary>

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "srdi/bench.hpp"
#include "srdi/bh.hpp"
#include "srdi/instance.hpp"
#include "srdi/linf.hpp"
#include "srdi/oracles.hpp"
#include "srdi/verify.hpp"

namespace {

using namespace srdi;
using Clock = std::chrono::steady_clock;

// Pinned parameters and tolerances.
constexpr long long kLinfTrials = 2500;
constexpr int kLinfMaxEdges = 8;
constexpr long long kBhTrials = 2500;
constexpr int kBhMaxEdges = 10;
constexpr double kCampaignSeconds = 60.0;
constexpr int kLargeEqualityRuns = 100;
constexpr int kLargeEqualityNodes = 10001;
constexpr double kEqualityTol = 1e-9;
constexpr int kMonotoneRuns = 10000;
constexpr int kMonotoneMaxNodes = 1001;
constexpr double kMonotoneSlack = 1e-12;
constexpr int kGateCases = 500;
constexpr double kGateDelta = 1e-6;
constexpr int kGateMaxEdges = 10;
constexpr int kPathSumRuns = 10000;
constexpr int kPathSumMaxEdges = 50;
constexpr int kBenchReps = 5;
const std::vector<int> kBenchSizes = {1000, 5000, 10000, 30000, 50000};
constexpr double kFastSolverSeconds = 1.0;
constexpr double kLinearSlopeLo = 0.7, kLinearSlopeHi = 1.3;
constexpr double kLogLinearSlopeLo = 0.7, kLogLinearSlopeHi = 1.5;
constexpr int kDeterminismRepeats = 10;
constexpr int kUniquenessRuns = 500;

struct Verdict {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int number, const std::string& title, const Verdict& v, double seconds) {
  char timing[32];
  std::snprintf(timing, sizeof(timing), "%.2fs", seconds);
  std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << number << " " << title << ": "
            << v.detail << " [" << timing << "]" << std::endl;
  failures += !v.pass;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

// Cost traces of mcsdiptc_inf must not rise; the cap must not trip.
std::string trace_problem(const SolveReport<double>& r) {
  if (r.iteration_cap_hit) return "iteration cap reached";
  for (std::size_t i = 1; i < r.cost_trace.size(); ++i) {
    const double prev = r.cost_trace[i - 1];
    if (r.cost_trace[i] > prev + kMonotoneSlack * std::max(1.0, std::abs(prev))) {
      std::ostringstream out;
      out.precision(17);
      out << "trace rises " << prev << " -> " << r.cost_trace[i];
      return out.str();
    }
  }
  return {};
}

VerifyResult linf_campaign;

// 1: l-infinity solvers against the grid, subset and parametric oracles.
Verdict criterion_oracle_linf(double& seconds) {
  const auto start = Clock::now();
  VerifyConfig config;
  config.trials = kLinfTrials;
  config.max_n = kLinfMaxEdges;
  config.seed = 101;
  config.norm = Norm::kLinf;
  config.dump_dir = std::filesystem::temp_directory_path();
  linf_campaign = run_verify(config);
  seconds = seconds_since(start);
  Verdict v;
  std::ostringstream out;
  for (const auto& t : linf_campaign.tallies) {
    out << to_string(t.key) << " " << t.agree << "/" << t.total << " ";
  }
  if (linf_campaign.first_mismatch) out << "first mismatch " << *linf_campaign.first_mismatch << " ";
  out << "(limit " << kCampaignSeconds << "s)";
  v.pass = linf_campaign.passed() && linf_campaign.total == 4 * kLinfTrials &&
           seconds < kCampaignSeconds;
  v.detail = out.str();
  return v;
}

// 2: bottleneck Hamming solvers against subset enumeration.
Verdict criterion_oracle_bh(double& seconds) {
  const auto start = Clock::now();
  VerifyConfig config;
  config.trials = kBhTrials;
  config.max_n = kBhMaxEdges;
  config.seed = 202;
  config.norm = Norm::kBh;
  config.dump_dir = std::filesystem::temp_directory_path();
  const VerifyResult result = run_verify(config);
  seconds = seconds_since(start);
  Verdict v;
  std::ostringstream out;
  for (const auto& t : result.tallies) out << to_string(t.key) << " " << t.agree << "/" << t.total << " ";
  if (result.first_mismatch) out << "first mismatch " << *result.first_mismatch << " ";
  out << "(limit " << kCampaignSeconds << "s)";
  v.pass = result.passed() && result.total == 4 * kBhTrials && seconds < kCampaignSeconds;
  v.detail = out.str();
  return v;
}

// 3: a feasible min-cost l-infinity optimum lands exactly on D.
Verdict criterion_equality_at_demand() {
  Verdict v;
  int checked = 0;
  int bad = 0;
  for (int run = 0; run < kLargeEqualityRuns; ++run) {
    GenConfig gen;
    gen.node_count = kLargeEqualityNodes;
    gen.seed = mix_seed(303, static_cast<std::uint64_t>(run));
    const InstanceFile inst = generate_instance(gen);
    const double demand = *inst.params.demand;
    const auto r = mcsdipt_inf(inst.tree, inst.attrs, demand);
    if (r.status != Status::kFeasible) continue;
    ++checked;
    const double reached = oracle::srd_by_paths(inst.tree, r.weights);
    if (!rel_close(reached, demand, kEqualityTol)) ++bad;
  }
  // The campaign of criterion 1 applies the same check on every feasible run.
  const long long campaign_mismatch = linf_campaign.total - linf_campaign.agree;
  v.pass = bad == 0 && checked == kLargeEqualityRuns && linf_campaign.srd_equality_checks > 0 &&
           campaign_mismatch == 0;
  v.detail = "campaign runs " + std::to_string(linf_campaign.srd_equality_checks) +
             " (mismatches " + std::to_string(campaign_mismatch) + "), n=10^4 runs " +
             std::to_string(checked - bad) + "/" + std::to_string(kLargeEqualityRuns) +
             " within 1e-9 relative";
  return v;
}

// 4: per-iteration costs of mcsdiptc_inf never rise; no cap trips.
Verdict criterion_monotone_iterations() {
  Verdict v;
  int bad = 0;
  int traced = 0;
  int swapped = 0;
  std::string first;
  for (int run = 0; run < kMonotoneRuns; ++run) {
    const std::uint64_t stream = mix_seed(404, static_cast<std::uint64_t>(run));
    Draws draws(stream);
    GenConfig gen;
    gen.node_count = 2 + static_cast<int>(draws.below(kMonotoneMaxNodes - 1));
    gen.seed = mix_seed(stream, 1);
    gen.shape = static_cast<TreeShape>(run % 4);
    const InstanceFile inst = generate_instance(gen);
    double demand = *inst.params.demand;
    long long cap = *inst.params.max_edges;
    if (run % 2 == 1) {
      // Few edges and a demand they can reach: exercises the swaps.
      const int n = inst.tree.edge_count();
      cap = 1 + static_cast<long long>(draws.below(static_cast<std::uint64_t>(std::min(n, 10))));
      const LeafCounts leaves = leaf_counts(inst.tree);
      std::vector<double> gains(static_cast<std::size_t>(n));
      for (int e = 0; e < n; ++e) {
        gains[e] = static_cast<double>(leaves[e]) * (inst.attrs.u[e] - inst.attrs.w[e]);
      }
      std::sort(gains.rbegin(), gains.rend());
      const double reach = std::accumulate(gains.begin(), gains.begin() + cap, 0.0);
      demand = srd(leaves, inst.attrs.w) + reach * (0.05 + 0.9 * draws.unit());
    }
    const auto r = mcsdiptc_inf(inst.tree, inst.attrs, demand, cap);
    if (!r.cost_trace.empty()) ++traced;
    if (r.cost_trace.size() > 1) ++swapped;
    const std::string problem = trace_problem(r);
    if (!problem.empty()) {
      if (first.empty()) first = "run " + std::to_string(run) + ": " + problem;
      ++bad;
    }
  }
  // Traces from the criterion 1 campaign were checked there.
  v.pass = bad == 0 && linf_campaign.trace_checks > 0 &&
           linf_campaign.tallies.size() == 4 && linf_campaign.passed();
  v.detail = std::to_string(kMonotoneRuns - bad) + "/" + std::to_string(kMonotoneRuns) +
             " runs up to n=1000 monotone without cap (" + std::to_string(traced) +
             " traced, " + std::to_string(swapped) + " with swaps), campaign traces " +
             std::to_string(linf_campaign.trace_checks);
  if (!first.empty()) v.detail += ", first " + first;
  return v;
}

// 5: infeasibility gates on constructed boundary instances.
Verdict criterion_gates() {
  Verdict v;
  std::map<std::string, std::pair<int, int>> tally;  // gate -> agree, total
  for (int run = 0; run < kGateCases; ++run) {
    const std::uint64_t stream = mix_seed(505, static_cast<std::uint64_t>(run));
    Draws draws(stream);
    GenConfig gen;
    gen.node_count = 2 + static_cast<int>(draws.below(kGateMaxEdges));
    gen.seed = mix_seed(stream, 1);
    gen.shape = static_cast<TreeShape>(run % 4);
    const InstanceFile inst = generate_instance(gen);
    const int n = inst.tree.edge_count();
    const double sign = run % 2 == 0 ? 1.0 : -1.0;

    // D = u(T) +- delta.
    const double base = oracle::srd_by_paths(inst.tree, inst.attrs.w);
    const double top = oracle::srd_by_paths(inst.tree, inst.attrs.u);
    const double d_top = top + sign * kGateDelta * std::max(1.0, top);
    const bool top_feasible = d_top <= top;
    {
      const auto r = mcsdipt_inf(inst.tree, inst.attrs, d_top);
      auto& t = tally["u(T) gate mcsdipt_inf"];
      t.first += (r.status == Status::kInfeasible) != top_feasible;
      ++t.second;
      const auto b = mcsdipt_bh(inst.tree, inst.attrs, d_top);
      auto& tb = tally["u(T) gate mcsdipt_bh"];
      tb.first += (b.status == Status::kInfeasible) != top_feasible;
      ++tb.second;
    }

    // Delta D = S_N +- delta, with S_N from subset enumeration.
    const int cap = 1 + static_cast<int>(draws.below(static_cast<std::uint64_t>(std::min(n, 4))));
    double best = 0;
    const LeafCounts leaves = leaf_counts(inst.tree);
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      if (std::popcount(mask) > cap) continue;
      double total = 0;
      for (int e = 0; e < n; ++e) {
        if (mask & (1U << e)) total += static_cast<double>(leaves[e]) * (inst.attrs.u[e] - inst.attrs.w[e]);
      }
      best = std::max(best, total);
    }
    const double d_gain = base + best + sign * kGateDelta * std::max(1.0, best);
    const auto linf_oracle = oracle::brute_mcsdiptc_inf(inst.tree, inst.attrs, d_gain, cap);
    const auto bh_oracle = oracle::brute_bh(inst.tree, inst.attrs, oracle::BhProblem::kMcsdiptc,
                                            oracle::BhParams<double>{0, d_gain, cap});
    const bool want_feasible = sign < 0;
    {
      const auto r = mcsdiptc_inf(inst.tree, inst.attrs, d_gain, cap);
      auto& t = tally["S_N gate mcsdiptc_inf"];
      t.first += (r.status != Status::kInfeasible) == want_feasible &&
                 linf_oracle.feasible == want_feasible;
      ++t.second;
      const auto b = mcsdiptc_bh(inst.tree, inst.attrs, d_gain, cap);
      auto& tb = tally["S_N gate mcsdiptc_bh"];
      tb.first += (b.status != Status::kInfeasible) == want_feasible &&
                  bh_oracle.feasible == want_feasible;
      ++tb.second;
    }
  }
  std::ostringstream out;
  for (const auto& [gate, t] : tally) {
    out << gate << " " << t.first << "/" << t.second << "; ";
    v.pass = v.pass && t.first == t.second && t.second == kGateCases;
  }
  out << "delta = 1e-6 * scale";
  v.detail = out.str();
  return v;
}

// 6: SRD by path traversal equals the leaf-count sum, exactly.
Verdict criterion_path_sum() {
  Verdict v;
  int agree = 0;
  for (int run = 0; run < kPathSumRuns; ++run) {
    const std::uint64_t stream = mix_seed(606, static_cast<std::uint64_t>(run));
    Draws draws(stream);
    GenConfig gen;
    gen.node_count = 2 + static_cast<int>(draws.below(kPathSumMaxEdges));
    gen.seed = mix_seed(stream, 1);
    gen.shape = static_cast<TreeShape>(run % 4);
    const InstanceFile inst = generate_instance(gen);
    WeightVector<Rational> x;
    for (int e = 0; e < inst.tree.edge_count(); ++e) {
      x.push_back(Rational(static_cast<long>(draws.below(100000)),
                           1 + static_cast<long>(draws.below(1000))));
    }
    agree += srd(inst.tree, x) == oracle::srd_by_paths(inst.tree, x);
  }
  v.pass = agree == kPathSumRuns;
  v.detail = std::to_string(agree) + "/" + std::to_string(kPathSumRuns) + " exact in rational mode";
  return v;
}

// 7: timing shape over the benchmark grid.
Verdict criterion_complexity() {
  BenchConfig config;
  config.sizes = kBenchSizes;
  config.reps = kBenchReps;
  config.seed = 707;
  const std::vector<BenchRow> rows = run_bench(config);
  Verdict v;
  std::ostringstream out;
  const ProblemKey slow{Problem::kMcsdiptc, Norm::kLinf};

  // (a)
  double worst_fast = 0;
  for (const BenchRow& row : rows) {
    if (!(row.key == slow)) worst_fast = std::max(worst_fast, row.t_max);
  }
  const bool fast_ok = worst_fast < kFastSolverSeconds;
  // (b)
  bool ordering_ok = true;
  for (int n : kBenchSizes) {
    double slow_mean = 0;
    double other_max = 0;
    for (const BenchRow& row : rows) {
      if (row.n != n) continue;
      if (row.key == slow) {
        slow_mean = row.t_mean;
      } else {
        other_max = std::max(other_max, row.t_mean);
      }
    }
    ordering_ok = ordering_ok && slow_mean > other_max;
  }
  // (c)
  auto slope_of = [&](ProblemKey key) {
    std::vector<double> x, y;
    for (const BenchRow& row : rows) {
      if (row.key == key) {
        x.push_back(row.n);
        y.push_back(row.t_mean);
      }
    }
    return loglog_slope(x, y);
  };
  bool slopes_ok = true;
  char buf[64];
  auto check = [&](ProblemKey key, double lo, double hi) {
    const double s = slope_of(key);
    slopes_ok = slopes_ok && s >= lo && s <= hi;
    std::snprintf(buf, sizeof(buf), "%s %.2f ", to_string(key).c_str(), s);
    out << buf;
  };
  out << "slowest other t_max " << worst_fast << "s; mcsdiptc_inf slowest at every size "
      << (ordering_ok ? "yes" : "no") << "; slopes ";
  check({Problem::kSdipt, Norm::kLinf}, kLinearSlopeLo, kLinearSlopeHi);
  check({Problem::kSdipt, Norm::kBh}, kLinearSlopeLo, kLinearSlopeHi);
  check({Problem::kMcsdipt, Norm::kLinf}, kLogLinearSlopeLo, kLogLinearSlopeHi);
  check({Problem::kMcsdipt, Norm::kBh}, kLogLinearSlopeLo, kLogLinearSlopeHi);
  check({Problem::kMcsdiptc, Norm::kBh}, kLogLinearSlopeLo, kLogLinearSlopeHi);
  v.pass = fast_ok && ordering_ok && slopes_ok;
  v.detail = out.str();
  return v;
}

struct CommandOutput {
  int exit_code = -1;
  std::string out;
};

CommandOutput run_command(const std::string& command) {
  CommandOutput result;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string without_timing(const std::string& text) {
  std::istringstream in(text);
  std::string line, kept;
  while (std::getline(in, line)) {
    if (line.rfind("wall_time_seconds", 0) != 0) kept += line + "\n";
  }
  return kept;
}

// 8: repeated solves and campaigns give identical reports.
Verdict criterion_determinism(const std::string& cli) {
  Verdict v;
  const auto fixture = std::filesystem::temp_directory_path() / "srdi_acceptance_fixture.tif";
  const CommandOutput gen =
      run_command(cli + " gen --nodes 400 --seed 808 --out " + fixture.string());
  if (gen.exit_code != 0) {
    v.pass = false;
    v.detail = "gen failed";
    return v;
  }
  int stable = 0;
  for (const ProblemKey& key : kAllProblems) {
    const std::string command = cli + " solve --problem " + std::string(to_string(key.problem)) +
                                " --norm " + std::string(to_string(key.norm)) + " --instance " +
                                fixture.string() + " --weights";
    const CommandOutput first = run_command(command);
    bool same = first.exit_code == 0 || first.exit_code == 2;
    const std::string reference = without_timing(first.out);
    for (int i = 1; i < kDeterminismRepeats && same; ++i) {
      const CommandOutput again = run_command(command);
      same = again.exit_code == first.exit_code && without_timing(again.out) == reference;
    }
    stable += same;
  }
  const std::string campaign = cli + " verify --trials 300 --max-n 8 --seed 809 --dump-dir " +
                               std::filesystem::temp_directory_path().string();
  const CommandOutput a = run_command(campaign);
  const CommandOutput b = run_command(campaign);
  const bool transcripts = a.exit_code == b.exit_code && a.out == b.out && !a.out.empty();
  v.pass = stable == static_cast<int>(kAllProblems.size()) && transcripts;
  v.detail = std::to_string(stable) + "/8 solve commands byte-identical over " +
             std::to_string(kDeterminismRepeats) + " runs; verify transcripts identical " +
             (transcripts ? "yes" : "no");
  return v;
}

// Weights of the min-cost l-infinity optimum rebuilt from a breakpoint:
// edges before it in (F, id) order at u, the rest at the common cost level.
struct Rebuilt {
  bool breakpoint_valid = false;
  WeightVector<Rational> weights;
  Rational cost;
};

Rebuilt rebuild_at_breakpoint(const RootedTree& tree, const EdgeAttrs<Rational>& attrs,
                              const Rational& demand, std::size_t breakpoint) {
  const int n = tree.edge_count();
  // Leaves under each edge by walking up from every leaf.
  std::vector<Rational> under(static_cast<std::size_t>(n), Rational(0));
  for (int leaf : tree.leaves()) {
    for (int v = leaf; v != 0; v = tree.parent(v)) under[v - 1] += 1;
  }
  Rational base(0);
  for (int e = 0; e < n; ++e) base += under[e] * attrs.w[e];
  const Rational deficit = demand - base;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Rational> full(static_cast<std::size_t>(n));
  for (int e = 0; e < n; ++e) full[e] = attrs.c[e] * (attrs.u[e] - attrs.w[e]);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return full[a] < full[b]; });

  // Gain when every edge may spend `level`.
  auto gain = [&](const Rational& level) {
    Rational total(0);
    for (int e = 0; e < n; ++e) {
      const Rational step = level / attrs.c[e];
      const Rational room = attrs.u[e] - attrs.w[e];
      total += under[e] * (step < room ? step : room);
    }
    return total;
  };
  auto level_at = [&](std::size_t k) { return k == 0 ? Rational(0) : full[order[k - 1]]; };

  Rebuilt out;
  const std::size_t k = breakpoint;
  out.breakpoint_valid = k < static_cast<std::size_t>(n) && gain(level_at(k)) < deficit &&
                         deficit <= gain(level_at(k + 1));
  if (!out.breakpoint_valid) return out;
  const Rational level = level_at(k);
  Rational rate(0);
  for (std::size_t j = k; j < order.size(); ++j) rate += under[order[j]] / attrs.c[order[j]];
  const Rational remainder = deficit - gain(level);
  out.weights = attrs.w;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const int e = order[j];
    out.weights[e] = j < k ? attrs.u[e]
                           : attrs.w[e] + level / attrs.c[e] + remainder / (attrs.c[e] * rate);
  }
  out.cost = level + remainder / rate;
  return out;
}

// 9: rational mcsdipt_inf equals the closed form at its reported breakpoint.
Verdict criterion_uniqueness() {
  Verdict v;
  int agree = 0;
  std::string first;
  for (int run = 0; run < kUniquenessRuns; ++run) {
    const std::uint64_t stream = mix_seed(909, static_cast<std::uint64_t>(run));
    Draws draws(stream);
    GenConfig gen;
    gen.node_count = 2 + static_cast<int>(draws.below(40));
    gen.seed = mix_seed(stream, 1);
    gen.shape = static_cast<TreeShape>(run % 4);
    InstanceFile inst = generate_instance(gen);
    if (run % 2 == 1) {
      // Small integers produce equal F values.
      for (std::size_t e = 0; e < inst.attrs.size(); ++e) {
        inst.attrs.w[e] = static_cast<double>(draws.below(5));
        inst.attrs.u[e] = inst.attrs.w[e] + static_cast<double>(draws.below(5));
        inst.attrs.c[e] = 1.0 + static_cast<double>(draws.below(4));
      }
    }
    const EdgeAttrs<Rational> attrs = to_rational(inst.attrs);
    const Rational base = srd(inst.tree, attrs.w);
    const Rational top = srd(inst.tree, attrs.u);
    if (!(base < top)) {
      ++agree;  // no feasible upgrade region; nothing to compare
      continue;
    }
    const Rational demand =
        base + (top - base) * Rational(1 + static_cast<long>(draws.below(1000)), 1000);
    const SolveReport<Rational> r = mcsdipt_inf(inst.tree, attrs, demand);
    std::string problem;
    if (r.status != Status::kFeasible || !r.breakpoint) {
      problem = "no feasible report";
    } else {
      const Rebuilt rebuilt = rebuild_at_breakpoint(inst.tree, attrs, demand, *r.breakpoint);
      if (!rebuilt.breakpoint_valid) {
        problem = "breakpoint " + std::to_string(*r.breakpoint) + " does not bracket the deficit";
      } else if (rebuilt.weights != r.weights) {
        problem = "weights differ";
      } else if (rebuilt.cost != r.cost || r.objective != r.cost) {
        problem = "cost differs";
      } else if (r.srd_value != demand) {
        problem = "srd differs from D";
      } else if (r.modified_edges != modified_edges(rebuilt.weights, attrs)) {
        problem = "modified edges differ";
      }
    }
    if (problem.empty()) {
      ++agree;
    } else if (first.empty()) {
      first = "run " + std::to_string(run) + ": " + problem;
    }
  }
  v.pass = agree == kUniquenessRuns;
  v.detail = std::to_string(agree) + "/" + std::to_string(kUniquenessRuns) +
             " field-for-field equal in rational mode";
  if (!first.empty()) v.detail += ", first " + first;
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: srdi_acceptance <srdi binary>\n";
    return 1;
  }
  const std::string cli = argv[1];
  double seconds = 0;
  Verdict v;

  v = criterion_oracle_linf(seconds);
  report(1, "l-infinity oracle equivalence", v, seconds);
  v = criterion_oracle_bh(seconds);
  report(2, "bottleneck Hamming oracle equivalence", v, seconds);

  auto timed = [](auto&& fn) {
    const auto start = Clock::now();
    Verdict v = fn();
    return std::pair{v, seconds_since(start)};
  };
  auto [v3, t3] = timed(criterion_equality_at_demand);
  report(3, "SRD equals D at the min-cost optimum", v3, t3);
  auto [v4, t4] = timed(criterion_monotone_iterations);
  report(4, "non-increasing swap iteration costs", v4, t4);
  auto [v5, t5] = timed(criterion_gates);
  report(5, "infeasibility gates", v5, t5);
  auto [v6, t6] = timed(criterion_path_sum);
  report(6, "path-sum identity", v6, t6);
  auto [v7, t7] = timed(criterion_complexity);
  report(7, "complexity shape", v7, t7);
  auto [v8, t8] = timed([&] { return criterion_determinism(cli); });
  report(8, "determinism", v8, t8);
  auto [v9, t9] = timed(criterion_uniqueness);
  report(9, "closed-form cross-check", v9, t9);

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
