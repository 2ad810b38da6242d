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

#include "srdi/problem.hpp"

#include "srdi/bh.hpp"
#include "srdi/linf.hpp"

namespace srdi {

std::string_view to_string(Problem problem) {
  switch (problem) {
    case Problem::kSdipt: return "sdipt";
    case Problem::kSdiptc: return "sdiptc";
    case Problem::kMcsdipt: return "mcsdipt";
    case Problem::kMcsdiptc: return "mcsdiptc";
  }
  return "unknown";
}

std::string_view to_string(Norm norm) { return norm == Norm::kLinf ? "linf" : "bh"; }

std::string to_string(const ProblemKey& key) {
  return std::string(to_string(key.problem)) + (key.norm == Norm::kLinf ? "_inf" : "_bh");
}

std::optional<Problem> parse_problem(std::string_view text) {
  if (text == "sdipt") return Problem::kSdipt;
  if (text == "sdiptc") return Problem::kSdiptc;
  if (text == "mcsdipt") return Problem::kMcsdipt;
  if (text == "mcsdiptc") return Problem::kMcsdiptc;
  return std::nullopt;
}

std::optional<Norm> parse_norm(std::string_view text) {
  if (text == "linf") return Norm::kLinf;
  if (text == "bh") return Norm::kBh;
  return std::nullopt;
}

namespace {

template <class T>
T require(const std::optional<T>& value, std::string_view name, const ProblemKey& key) {
  if (!value) {
    throw Error(ErrorCode::kMissingParam, std::string(name) + " is required by " + to_string(key));
  }
  return *value;
}

}  // namespace

SolveReport<double> solve(const ProblemKey& key, const RootedTree& tree,
                          const EdgeAttrs<double>& attrs, const ProblemParams& params) {
  const bool linf = key.norm == Norm::kLinf;
  switch (key.problem) {
    case Problem::kSdipt: {
      const double k = require(params.budget, "K", key);
      return linf ? sdipt_inf(tree, attrs, k) : sdipt_bh(tree, attrs, k);
    }
    case Problem::kSdiptc: {
      const double k = require(params.budget, "K", key);
      const long long n = require(params.max_edges, "N", key);
      return linf ? sdiptc_inf(tree, attrs, k, n) : sdiptc_bh(tree, attrs, k, n);
    }
    case Problem::kMcsdipt: {
      const double d = require(params.demand, "D", key);
      return linf ? mcsdipt_inf(tree, attrs, d) : mcsdipt_bh(tree, attrs, d);
    }
    case Problem::kMcsdiptc: {
      const double d = require(params.demand, "D", key);
      const long long n = require(params.max_edges, "N", key);
      return linf ? mcsdiptc_inf(tree, attrs, d, n) : mcsdiptc_bh(tree, attrs, d, n);
    }
  }
  throw Error(ErrorCode::kUnknownProblemTag, "unhandled problem");
}

}  // namespace srdi
