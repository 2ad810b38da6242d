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

#include "srdi/oracles.hpp"

namespace srdi {
namespace oracle {

std::optional<BhProblem> parse_bh_problem(std::string_view tag) {
  if (tag == "sdipt_bh") return BhProblem::kSdipt;
  if (tag == "sdiptc_bh") return BhProblem::kSdiptc;
  if (tag == "mcsdipt_bh") return BhProblem::kMcsdipt;
  if (tag == "mcsdiptc_bh") return BhProblem::kMcsdiptc;
  return std::nullopt;
}

}  // namespace oracle
}  // namespace srdi
