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

#ifndef SRDI_TREE_HPP_
#define SRDI_TREE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srdi/error.hpp"
#include "srdi/scalar.hpp"

namespace srdi {

struct EdgeRecord {
  int id = 0;
  std::string parent;
  std::string child;
};

// Per-edge attributes indexed by edge id - 1: original weight `w`, upper
// bound `u` and modification cost `c`.
template <Scalar S>
struct EdgeAttrs {
  std::vector<S> w;
  std::vector<S> u;
  std::vector<S> c;

  std::size_t size() const { return w.size(); }
};

// Upgraded weights indexed by edge id - 1.
template <Scalar S>
using WeightVector = std::vector<S>;

// |L(e)| per edge, indexed by edge id - 1.
using LeafCounts = std::vector<std::int64_t>;

// Immutable rooted tree. Node 0 is the root and node i (1 <= i <= n) is the
// child endpoint of edge i, so edges and non-root nodes share ids.
class RootedTree {
 public:
  int edge_count() const { return static_cast<int>(parent_.size()) - 1; }
  int node_count() const { return static_cast<int>(parent_.size()); }

  const std::string& root() const { return names_[0]; }
  const std::string& node_name(int node) const { return names_[node]; }

  // Parent node of `node` (node >= 1). Also the id of the edge entering the
  // parent, unless the parent is the root.
  int parent(int node) const { return parent_[node]; }

  std::span<const int> children(int node) const {
    return {child_list_.data() + child_begin_[node],
            child_list_.data() + child_begin_[node + 1]};
  }

  bool is_leaf(int node) const { return node != 0 && children(node).empty(); }

  // Leaf nodes in ascending id order.
  const std::vector<int>& leaves() const { return leaves_; }

  // Nodes in breadth-first order from the root.
  const std::vector<int>& top_down_order() const { return order_; }

  // Edge records in ascending id order.
  std::vector<EdgeRecord> edges() const;

  friend RootedTree build_tree(std::span<const EdgeRecord> edge_list,
                               const std::optional<std::string>& root);
  friend LeafCounts leaf_counts(const RootedTree& tree);

 private:
  RootedTree() = default;

  std::vector<std::string> names_;
  std::vector<int> parent_;
  std::vector<int> child_begin_;
  std::vector<int> child_list_;
  std::vector<int> order_;
  std::vector<int> leaves_;
  // Indexed by breadth-first position: the parent's position and a leaf flag.
  std::vector<int> order_parent_;
  std::vector<char> order_leaf_;
};

// Validates the topology. When `root` is given it must be the unique node
// without a parent.
RootedTree build_tree(std::span<const EdgeRecord> edge_list,
                      const std::optional<std::string>& root = std::nullopt);

template <Scalar S>
void validate_attrs(const RootedTree& tree, const EdgeAttrs<S>& attrs) {
  const std::size_t n = static_cast<std::size_t>(tree.edge_count());
  if (attrs.w.size() != n || attrs.u.size() != n || attrs.c.size() != n) {
    throw Error(ErrorCode::kMissingEdgeWeight,
                "attributes must be defined on all " + std::to_string(n) + " edges");
  }
  for (std::size_t k = 0; k < n; ++k) {
    if constexpr (!ScalarTraits<S>::kExact) {
      if (!std::isfinite(attrs.w[k]) || !std::isfinite(attrs.u[k]) ||
          !std::isfinite(attrs.c[k])) {
        throw Error(ErrorCode::kAttrBoundsViolated,
                    "edge " + std::to_string(k + 1) + " has a non-finite attribute");
      }
    }
    if (!(attrs.w[k] >= 0) || !(attrs.u[k] >= attrs.w[k]) || !(attrs.c[k] > 0)) {
      throw Error(ErrorCode::kAttrBoundsViolated,
                  "edge " + std::to_string(k + 1) + " violates u >= w >= 0, c > 0");
    }
  }
}

template <Scalar S>
RootedTree build_tree(std::span<const EdgeRecord> edge_list, const EdgeAttrs<S>& attrs,
                      const std::optional<std::string>& root = std::nullopt) {
  RootedTree tree = build_tree(edge_list, root);
  validate_attrs(tree, attrs);
  return tree;
}

// One bottom-up pass.
LeafCounts leaf_counts(const RootedTree& tree);

template <Scalar S>
S srd(const LeafCounts& leaves, const WeightVector<S>& weights) {
  if (weights.size() != leaves.size()) {
    throw Error(ErrorCode::kMissingEdgeWeight,
                "weight vector has " + std::to_string(weights.size()) + " entries, expected " +
                    std::to_string(leaves.size()));
  }
  S total(0);
  for (std::size_t k = 0; k < leaves.size(); ++k) total += S(leaves[k]) * weights[k];
  return total;
}

// Sum of root-leaf path weights, evaluated as sum over edges of |L(e)| w(e).
template <Scalar S>
S srd(const RootedTree& tree, const WeightVector<S>& weights) {
  return srd(leaf_counts(tree), weights);
}

template <Scalar S>
int hamming_count(const WeightVector<S>& weights, const EdgeAttrs<S>& attrs) {
  int count = 0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (ScalarTraits<S>::differs(weights[k], attrs.w[k])) ++count;
  }
  return count;
}

// Ids of edges whose weight differs from the original, ascending.
template <Scalar S>
std::vector<int> modified_edges(const WeightVector<S>& weights, const EdgeAttrs<S>& attrs) {
  std::vector<int> ids;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (ScalarTraits<S>::differs(weights[k], attrs.w[k])) ids.push_back(static_cast<int>(k) + 1);
  }
  return ids;
}

// Exact conversion; every finite double is a rational.
inline EdgeAttrs<Rational> to_rational(const EdgeAttrs<double>& attrs) {
  EdgeAttrs<Rational> out;
  for (double x : attrs.w) out.w.emplace_back(x);
  for (double x : attrs.u) out.u.emplace_back(x);
  for (double x : attrs.c) out.c.emplace_back(x);
  return out;
}

}  // namespace srdi

#endif  // SRDI_TREE_HPP_
