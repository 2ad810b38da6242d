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

#ifndef SRDI_VERIFY_HPP_
#define SRDI_VERIFY_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "srdi/instance.hpp"
#include "srdi/problem.hpp"

namespace srdi {

// Comparison tolerances of the oracle campaigns.
inline constexpr double kGridSlack = 1e-3;       // sdipt_inf against the grid oracle
inline constexpr double kRelativeTol = 1e-9;     // objectives, costs, SRD equalities
inline constexpr double kTraceSlack = 1e-12;     // per-iteration cost monotonicity
inline constexpr int kGridSteps = 10000;
inline constexpr int kMaxOracleEdges = 12;
inline constexpr long long kMaxSwapCardinality = 3;  // N cap for mcsdiptc_inf trials

struct VerifyConfig {
  long long trials = 100;
  int max_n = 8;  // edges
  std::uint64_t seed = 1;
  std::optional<Problem> problem;
  std::optional<Norm> norm;
  // Directory for the first mismatching instance; empty disables the dump.
  std::filesystem::path dump_dir = ".";
  // Harness self-test: corrupts every solver result before comparison.
  bool inject_fault = false;
};

struct ProblemTally {
  ProblemKey key;
  long long agree = 0;
  long long total = 0;
};

struct VerifyResult {
  std::vector<ProblemTally> tallies;
  long long agree = 0;
  long long total = 0;
  long long srd_equality_checks = 0;  // Feasible mcsdipt_inf runs with w(T) < D
  long long trace_checks = 0;         // mcsdiptc_inf runs with a recorded trace
  std::optional<std::string> first_mismatch;
  std::optional<std::filesystem::path> dump_path;
  // One line per problem plus a summary; no timing.
  std::string transcript;

  bool passed() const { return agree == total; }
};

// Instance of trial `trial`: 1..max_n edges, shapes cycled, odd trials with
// small-integer attributes and boundary demands.
InstanceFile verify_instance(std::uint64_t seed, long long trial, int max_n);

struct CheckOutcome {
  std::string mismatch;  // empty on agreement
  bool srd_equality_checked = false;
  bool trace_checked = false;
};

// Parameters a trial passes to `key`: the instance's own, with N capped at
// kMaxSwapCardinality for mcsdiptc_inf.
ProblemParams trial_params(const ProblemKey& key, const ProblemParams& params);

// Runs the solver for `key` on the instance and compares it with the matching
// oracle. `inject_fault` corrupts the solver result first.
CheckOutcome check_against_oracle(const ProblemKey& key, const InstanceFile& instance,
                                  bool inject_fault = false);

VerifyResult run_verify(const VerifyConfig& config);

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace srdi

#endif  // SRDI_VERIFY_HPP_
