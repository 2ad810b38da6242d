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

#ifndef SRDI_BENCH_HPP_
#define SRDI_BENCH_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "srdi/problem.hpp"

namespace srdi {

struct BenchConfig {
  std::vector<int> sizes = {1000, 5000, 10000, 30000, 50000};  // vertex counts
  int reps = 5;
  std::uint64_t seed = 1;
  // Fast solvers are re-run until one sample spans at least this long; the
  // sample time is the average.
  double min_sample_seconds = 0.002;
};

struct BenchRow {
  ProblemKey key;
  int n = 0;  // vertex count
  int reps = 0;
  double t_mean = 0;
  double t_max = 0;
  double t_min = 0;
};

// Rows ordered by size, then solver in kAllProblems order. Only the solver
// call is timed; instances are generated beforehand. Instance r of size n
// comes from generate_instance with seed mix_seed(seed, n * 1000003 + r).
std::vector<BenchRow> run_bench(const BenchConfig& config,
                                const std::function<void(const BenchRow&)>& on_row = {});

inline constexpr const char* kBenchCsvHeader = "problem,norm,n,reps,t_mean,t_max,t_min";
std::string to_csv_line(const BenchRow& row);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace srdi

#endif  // SRDI_BENCH_HPP_
