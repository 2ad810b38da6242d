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

#ifndef SRDI_PROBLEM_HPP_
#define SRDI_PROBLEM_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "srdi/report.hpp"
#include "srdi/selection.hpp"
#include "srdi/tree.hpp"

namespace srdi {

enum class Problem { kSdipt, kSdiptc, kMcsdipt, kMcsdiptc };
enum class Norm { kLinf, kBh };

struct ProblemKey {
  Problem problem = Problem::kSdipt;
  Norm norm = Norm::kLinf;

  friend bool operator==(const ProblemKey&, const ProblemKey&) = default;
};

// All eight solvers in report order.
inline constexpr std::array<ProblemKey, 8> kAllProblems = {{
    {Problem::kSdipt, Norm::kLinf},
    {Problem::kSdiptc, Norm::kLinf},
    {Problem::kMcsdipt, Norm::kLinf},
    {Problem::kMcsdiptc, Norm::kLinf},
    {Problem::kSdipt, Norm::kBh},
    {Problem::kSdiptc, Norm::kBh},
    {Problem::kMcsdipt, Norm::kBh},
    {Problem::kMcsdiptc, Norm::kBh},
}};

std::string_view to_string(Problem problem);
std::string_view to_string(Norm norm);
std::string to_string(const ProblemKey& key);  // e.g. "mcsdiptc_inf"
std::optional<Problem> parse_problem(std::string_view text);
std::optional<Norm> parse_norm(std::string_view text);

inline bool is_min_cost(Problem p) { return p == Problem::kMcsdipt || p == Problem::kMcsdiptc; }
inline bool has_cardinality(Problem p) { return p == Problem::kSdiptc || p == Problem::kMcsdiptc; }

struct ProblemParams {
  std::optional<double> budget;      // K
  std::optional<double> demand;      // D
  std::optional<long long> max_edges;  // N
};

// Dispatches to the matching solver. Throws MissingParam when a parameter the
// problem needs is absent.
SolveReport<double> solve(const ProblemKey& key, const RootedTree& tree,
                          const EdgeAttrs<double>& attrs, const ProblemParams& params);

}  // namespace srdi

#endif  // SRDI_PROBLEM_HPP_
