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

#include "srdi/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace srdi {
namespace {

std::vector<std::string_view> split_fields(std::string_view line, int lineno) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = line.find(' ', begin);
    std::string_view field = line.substr(begin, end == std::string_view::npos ? end : end - begin);
    if (field.empty()) throw Error(ErrorCode::kSyntaxError, "fields must be single-space separated", lineno);
    fields.push_back(field);
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return fields;
}

double parse_decimal(std::string_view text, int lineno) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::kSyntaxError, "bad decimal '" + std::string(text) + "'", lineno);
  }
  return value;
}

long long parse_integer(std::string_view text, int lineno) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kSyntaxError, "bad integer '" + std::string(text) + "'", lineno);
  }
  return value;
}

void expect_fields(const std::vector<std::string_view>& fields, std::size_t count, int lineno) {
  if (fields.size() != count) {
    throw Error(ErrorCode::kSyntaxError,
                "'" + std::string(fields[0]) + "' takes " + std::to_string(count - 1) + " fields",
                lineno);
  }
}

struct ParsedEdge {
  EdgeRecord record;
  double w, u, c;
  int line;
};

}  // namespace

InstanceFile parse_instance(std::string_view text) {
  bool header = false;
  std::optional<long long> edge_count;
  int edge_count_line = 0;
  std::optional<std::string> root;
  std::vector<ParsedEdge> edges;
  ProblemParams params;

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const std::vector<std::string_view> f = split_fields(line, lineno);
    if (!header) {
      if (f.size() != 2 || f[0] != "tif" || f[1] != "v1") {
        throw Error(ErrorCode::kMissingHeader, "expected 'tif v1'", lineno);
      }
      header = true;
      continue;
    }
    const std::string_view directive = f[0];
    if (directive == "n") {
      expect_fields(f, 2, lineno);
      if (edge_count) throw Error(ErrorCode::kSyntaxError, "repeated 'n'", lineno);
      edge_count = parse_integer(f[1], lineno);
      edge_count_line = lineno;
      if (*edge_count < 1) throw Error(ErrorCode::kSyntaxError, "n must be positive", lineno);
    } else if (directive == "root") {
      expect_fields(f, 2, lineno);
      if (root) throw Error(ErrorCode::kSyntaxError, "repeated 'root'", lineno);
      root = std::string(f[1]);
    } else if (directive == "edge") {
      expect_fields(f, 7, lineno);
      ParsedEdge e;
      const long long id = parse_integer(f[1], lineno);
      if (id < 1 || id > std::numeric_limits<int>::max()) {
        throw Error(ErrorCode::kSyntaxError, "edge id must be positive", lineno);
      }
      e.record = {static_cast<int>(id), std::string(f[2]), std::string(f[3])};
      e.w = parse_decimal(f[4], lineno);
      e.u = parse_decimal(f[5], lineno);
      e.c = parse_decimal(f[6], lineno);
      e.line = lineno;
      if (!(e.w >= 0) || !(e.u >= e.w) || !(e.c > 0)) {
        throw Error(ErrorCode::kBoundViolation, "requires u >= w >= 0 and c > 0", lineno);
      }
      edges.push_back(std::move(e));
    } else if (directive == "param") {
      expect_fields(f, 3, lineno);
      auto once = [&](bool present) {
        if (present) throw Error(ErrorCode::kSyntaxError, "repeated param", lineno);
      };
      if (f[1] == "K") {
        once(params.budget.has_value());
        params.budget = parse_decimal(f[2], lineno);
      } else if (f[1] == "D") {
        once(params.demand.has_value());
        params.demand = parse_decimal(f[2], lineno);
      } else if (f[1] == "N") {
        once(params.max_edges.has_value());
        params.max_edges = parse_integer(f[2], lineno);
      } else {
        throw Error(ErrorCode::kSyntaxError, "unknown param '" + std::string(f[1]) + "'", lineno);
      }
    } else if (directive == "tif") {
      throw Error(ErrorCode::kSyntaxError, "repeated header", lineno);
    } else {
      throw Error(ErrorCode::kSyntaxError, "unknown directive '" + std::string(directive) + "'",
                  lineno);
    }
  }

  if (!header) throw Error(ErrorCode::kMissingHeader, "no 'tif v1' line");
  if (!edge_count) throw Error(ErrorCode::kMissingHeader, "no 'n' line");
  if (!root) throw Error(ErrorCode::kMissingHeader, "no 'root' line");
  if (static_cast<long long>(edges.size()) != *edge_count) {
    throw Error(ErrorCode::kSyntaxError,
                "n is " + std::to_string(*edge_count) + " but " + std::to_string(edges.size()) +
                    " edges follow",
                edge_count_line);
  }

  const auto n = static_cast<std::size_t>(*edge_count);
  std::vector<int> seen_line(n + 1, 0);
  for (const ParsedEdge& e : edges) {
    const auto id = static_cast<std::size_t>(e.record.id);
    if (id > n) {
      throw Error(ErrorCode::kBadEdgeId, "edge id " + std::to_string(id) + " exceeds n", e.line);
    }
    if (seen_line[id] != 0) {
      throw Error(ErrorCode::kDuplicateEdgeId,
                  "edge id " + std::to_string(id) + " first seen on line " +
                      std::to_string(seen_line[id]),
                  e.line);
    }
    seen_line[id] = e.line;
  }
  std::sort(edges.begin(), edges.end(),
            [](const ParsedEdge& a, const ParsedEdge& b) { return a.record.id < b.record.id; });

  std::vector<EdgeRecord> records;
  EdgeAttrs<double> attrs;
  records.reserve(n);
  for (ParsedEdge& e : edges) {
    records.push_back(std::move(e.record));
    attrs.w.push_back(e.w);
    attrs.u.push_back(e.u);
    attrs.c.push_back(e.c);
  }
  RootedTree tree = build_tree(std::span<const EdgeRecord>(records), attrs, root);
  return InstanceFile{std::move(tree), std::move(attrs), params};
}

InstanceFile load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string format_decimal(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string serialize_instance(const InstanceFile& instance) {
  std::string out = "tif v1\n";
  out += "n " + std::to_string(instance.tree.edge_count()) + "\n";
  out += "root " + instance.tree.root() + "\n";
  for (const EdgeRecord& e : instance.tree.edges()) {
    const auto k = static_cast<std::size_t>(e.id - 1);
    out += "edge " + std::to_string(e.id) + " " + e.parent + " " + e.child + " " +
           format_decimal(instance.attrs.w[k]) + " " + format_decimal(instance.attrs.u[k]) +
           " " + format_decimal(instance.attrs.c[k]) + "\n";
  }
  if (instance.params.budget) out += "param K " + format_decimal(*instance.params.budget) + "\n";
  if (instance.params.demand) out += "param D " + format_decimal(*instance.params.demand) + "\n";
  if (instance.params.max_edges) {
    out += "param N " + std::to_string(*instance.params.max_edges) + "\n";
  }
  return out;
}

void save_instance(const InstanceFile& instance, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path.string() + "'");
  out << serialize_instance(instance);
  if (!out) throw Error(ErrorCode::kIo, "write to '" + path.string() + "' failed");
}

std::string digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  static constexpr char kHex[] = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = kHex[hash & 0xF];
    hash >>= 4;
  }
  buf[16] = '\0';
  return buf;
}

std::string_view to_string(TreeShape shape) {
  switch (shape) {
    case TreeShape::kUniformRandomParent: return "uniform-random-parent";
    case TreeShape::kCaterpillar: return "caterpillar";
    case TreeShape::kStar: return "star";
    case TreeShape::kBinary: return "binary";
  }
  return "unknown";
}

std::optional<TreeShape> parse_shape(std::string_view text) {
  if (text == "uniform-random-parent") return TreeShape::kUniformRandomParent;
  if (text == "caterpillar") return TreeShape::kCaterpillar;
  if (text == "star") return TreeShape::kStar;
  if (text == "binary") return TreeShape::kBinary;
  return std::nullopt;
}

std::uint64_t Draws::below(std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % bound;
  }
}

InstanceFile generate_instance(const GenConfig& config) {
  if (config.node_count < 2) throw Error(ErrorCode::kBadConfig, "node_count must be at least 2");
  if (!(config.w_max >= 0) || !(config.u_slack_max >= 0) || !(config.c_max > 0) ||
      !std::isfinite(config.w_max) || !std::isfinite(config.u_slack_max) ||
      !std::isfinite(config.c_max)) {
    throw Error(ErrorCode::kBadConfig, "need w_max >= 0, u_slack_max >= 0, c_max > 0");
  }
  const int n = config.node_count - 1;
  Draws draws(config.seed);

  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  switch (config.shape) {
    case TreeShape::kUniformRandomParent:
      for (int v = 1; v <= n; ++v) parent[v] = static_cast<int>(draws.below(static_cast<std::uint64_t>(v)));
      break;
    case TreeShape::kStar:
      break;
    case TreeShape::kBinary:
      for (int v = 1; v <= n; ++v) parent[v] = (v - 1) / 2;
      break;
    case TreeShape::kCaterpillar: {
      const int spine = std::max(1, config.node_count / 2);
      for (int v = 1; v <= n; ++v) {
        parent[v] = v <= spine ? v - 1
                               : 1 + static_cast<int>(draws.below(static_cast<std::uint64_t>(spine)));
      }
      break;
    }
  }

  std::vector<EdgeRecord> records;
  EdgeAttrs<double> attrs;
  records.reserve(static_cast<std::size_t>(n));
  auto name = [](int v) { return v == 0 ? std::string("s") : "v" + std::to_string(v); };
  for (int v = 1; v <= n; ++v) {
    records.push_back({v, name(parent[v]), name(v)});
    const double w = draws.uniform(0.0, config.w_max);
    const double u = w + draws.uniform(0.0, config.u_slack_max);
    const double c = draws.positive(config.c_max);
    attrs.w.push_back(w);
    attrs.u.push_back(u);
    attrs.c.push_back(c);
  }
  RootedTree tree = build_tree(std::span<const EdgeRecord>(records), attrs, std::string("s"));

  const LeafCounts leaves = leaf_counts(tree);
  double max_full_cost = 0;
  for (std::size_t k = 0; k < attrs.size(); ++k) {
    max_full_cost = std::max(max_full_cost, attrs.c[k] * (attrs.u[k] - attrs.w[k]));
  }
  const double base = srd(leaves, attrs.w);
  const double top = srd(leaves, attrs.u);
  ProblemParams params;
  params.budget = draws.positive(max_full_cost);
  params.demand = std::clamp(draws.uniform(base, top), base, top);
  params.max_edges = 1 + static_cast<long long>(draws.below(static_cast<std::uint64_t>(n)));
  return InstanceFile{std::move(tree), std::move(attrs), params};
}

}  // namespace srdi
