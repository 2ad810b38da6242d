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

#include "srdi/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "srdi/instance.hpp"
#include "srdi/verify.hpp"

namespace srdi {
namespace {

using Clock = std::chrono::steady_clock;

// Keeps the optimiser from discarding solver calls.
volatile double sink = 0;

double time_solver(const ProblemKey& key, const InstanceFile& instance, double min_seconds) {
  long long runs = 0;
  const auto start = Clock::now();
  double elapsed = 0;
  do {
    const SolveReport<double> report = solve(key, instance.tree, instance.attrs, instance.params);
    sink = sink + report.cost;
    ++runs;
    elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  } while (elapsed < min_seconds);
  return elapsed / static_cast<double>(runs);
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config,
                                const std::function<void(const BenchRow&)>& on_row) {
  if (config.reps < 1) throw Error(ErrorCode::kBadConfig, "reps must be positive");
  for (int n : config.sizes) {
    if (n < 2) throw Error(ErrorCode::kBadConfig, "sizes must be at least 2");
  }
  std::vector<BenchRow> rows;
  for (int n : config.sizes) {
    std::vector<InstanceFile> instances;
    for (int r = 0; r < config.reps; ++r) {
      GenConfig gen;
      gen.node_count = n;
      gen.seed = mix_seed(config.seed, static_cast<std::uint64_t>(n) * 1000003ULL +
                                           static_cast<std::uint64_t>(r));
      instances.push_back(generate_instance(gen));
    }
    for (const ProblemKey& key : kAllProblems) {
      BenchRow row{key, n, config.reps, 0, 0, 0};
      std::vector<double> times;
      for (const InstanceFile& instance : instances) {
        times.push_back(time_solver(key, instance, config.min_sample_seconds));
      }
      double total = 0;
      for (double t : times) total += t;
      row.t_mean = total / static_cast<double>(times.size());
      row.t_max = *std::max_element(times.begin(), times.end());
      row.t_min = *std::min_element(times.begin(), times.end());
      if (on_row) on_row(row);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string to_csv_line(const BenchRow& row) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s,%s,%d,%d,%.6e,%.6e,%.6e",
                std::string(to_string(row.key.problem)).c_str(),
                std::string(to_string(row.key.norm)).c_str(), row.n, row.reps, row.t_mean,
                row.t_max, row.t_min);
  return buf;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error(ErrorCode::kBadConfig, "slope needs two or more paired points");
  }
  const auto m = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace srdi
