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

#ifndef SRDI_INSTANCE_HPP_
#define SRDI_INSTANCE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "srdi/problem.hpp"
#include "srdi/tree.hpp"

namespace srdi {

// A tree, its edge attributes and optional K, D, N. Text form ("tif v1"):
//
//   # comment
//   tif v1
//   n <edge_count>
//   root <node_name>
//   edge <id> <parent> <child> <w> <u> <c>
//   param K <decimal>
//   param D <decimal>
//   param N <int>
struct InstanceFile {
  RootedTree tree;
  EdgeAttrs<double> attrs;
  ProblemParams params;
};

InstanceFile parse_instance(std::string_view text);
InstanceFile load_instance(const std::filesystem::path& path);

// Canonical text: header, n, root, edges by id, then params K, D, N.
// Decimals use the shortest representation that parses back to the same
// double.
std::string serialize_instance(const InstanceFile& instance);
void save_instance(const InstanceFile& instance, const std::filesystem::path& path);

std::string format_decimal(double value);

// 64-bit FNV-1a, rendered as 16 hex digits.
std::string digest(std::string_view bytes);

enum class TreeShape { kUniformRandomParent, kCaterpillar, kStar, kBinary };

std::string_view to_string(TreeShape shape);
std::optional<TreeShape> parse_shape(std::string_view text);

struct GenConfig {
  int node_count = 1001;
  std::uint64_t seed = 1;
  double w_max = 10.0;
  double u_slack_max = 10.0;
  double c_max = 10.0;
  TreeShape shape = TreeShape::kUniformRandomParent;
};

// Draw sequence from std::mt19937_64(seed), one engine output per draw:
//   1. parents of v1..vn (shape dependent),
//   2. per edge in id order: w, u - w, c,
//   3. K, D, N.
// A unit draw is (x >> 11) * 2^-53; integers in [0, m) use rejection on the
// top of the 64-bit range.
InstanceFile generate_instance(const GenConfig& config);

// Portable draws shared by the generator and the verification campaigns.
class Draws {
 public:
  explicit Draws(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  // (0, hi]
  double positive(double hi) { return hi * (1.0 - unit()); }
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace srdi

#endif  // SRDI_INSTANCE_HPP_
