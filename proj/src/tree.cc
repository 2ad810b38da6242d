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

#include "srdi/tree.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace srdi {

std::vector<EdgeRecord> RootedTree::edges() const {
  std::vector<EdgeRecord> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int id = 1; id <= edge_count(); ++id) {
    out.push_back({id, names_[parent_[id]], names_[id]});
  }
  return out;
}

RootedTree build_tree(std::span<const EdgeRecord> edge_list,
                      const std::optional<std::string>& root) {
  const int n = static_cast<int>(edge_list.size());
  if (n == 0) throw Error(ErrorCode::kEmptyTree, "edge list is empty");

  // Slot id holds the record of edge id.
  std::vector<const EdgeRecord*> by_id(static_cast<std::size_t>(n) + 1, nullptr);
  for (const EdgeRecord& e : edge_list) {
    if (e.id < 1 || e.id > n) {
      throw Error(ErrorCode::kBadEdgeId,
                  "edge id " + std::to_string(e.id) + " outside 1.." + std::to_string(n));
    }
    if (by_id[e.id] != nullptr) {
      throw Error(ErrorCode::kDuplicateEdgeId, "edge id " + std::to_string(e.id) + " repeats");
    }
    by_id[e.id] = &e;
  }

  // A non-root node is named by the edge entering it.
  std::unordered_map<std::string, int> child_edge;
  child_edge.reserve(static_cast<std::size_t>(n) * 2);
  for (int id = 1; id <= n; ++id) {
    const EdgeRecord& e = *by_id[id];
    if (e.parent == e.child) {
      throw Error(ErrorCode::kCycleDetected, "edge " + std::to_string(id) + " is a self-loop");
    }
    auto [it, inserted] = child_edge.emplace(e.child, id);
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateChild,
                  "node '" + e.child + "' is the child of edges " + std::to_string(it->second) +
                      " and " + std::to_string(id));
    }
  }

  std::optional<std::string> found_root;
  for (int id = 1; id <= n; ++id) {
    const std::string& p = by_id[id]->parent;
    if (child_edge.contains(p)) continue;
    if (!found_root) {
      found_root = p;
    } else if (*found_root != p) {
      throw Error(ErrorCode::kMultipleRoots,
                  "nodes '" + *found_root + "' and '" + p + "' both lack a parent");
    }
  }
  if (!found_root) {
    throw Error(ErrorCode::kCycleDetected, "every node has a parent");
  }
  if (root && *root != *found_root) {
    if (child_edge.contains(*root)) {
      throw Error(ErrorCode::kMultipleRoots,
                  "declared root '" + *root + "' has a parent; '" + *found_root +
                      "' has none");
    }
    throw Error(ErrorCode::kDisconnectedNode,
                "declared root '" + *root + "' does not appear in any edge");
  }

  RootedTree tree;
  tree.names_.resize(static_cast<std::size_t>(n) + 1);
  tree.parent_.assign(static_cast<std::size_t>(n) + 1, -1);
  tree.names_[0] = *found_root;
  std::vector<int> child_count(static_cast<std::size_t>(n) + 1, 0);
  for (int id = 1; id <= n; ++id) {
    const EdgeRecord& e = *by_id[id];
    tree.names_[id] = e.child;
    auto it = child_edge.find(e.parent);
    const int parent = it == child_edge.end() ? 0 : it->second;
    tree.parent_[id] = parent;
    ++child_count[parent];
  }

  tree.child_begin_.assign(static_cast<std::size_t>(n) + 2, 0);
  for (int v = 0; v <= n; ++v) tree.child_begin_[v + 1] = tree.child_begin_[v] + child_count[v];
  tree.child_list_.resize(static_cast<std::size_t>(n));
  std::vector<int> cursor(tree.child_begin_.begin(), tree.child_begin_.end() - 1);
  for (int id = 1; id <= n; ++id) tree.child_list_[cursor[tree.parent_[id]]++] = id;

  tree.order_.reserve(static_cast<std::size_t>(n) + 1);
  tree.order_.push_back(0);
  for (std::size_t head = 0; head < tree.order_.size(); ++head) {
    for (int child : tree.children(tree.order_[head])) tree.order_.push_back(child);
  }
  if (static_cast<int>(tree.order_.size()) != n + 1) {
    // Single root and single parents: whatever is unreachable sits on a cycle.
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : tree.order_) seen[v] = 1;
    for (int id = 1; id <= n; ++id) {
      if (!seen[id]) {
        throw Error(ErrorCode::kCycleDetected,
                    "node '" + tree.names_[id] + "' is unreachable from the root");
      }
    }
  }

  for (int v = 1; v <= n; ++v) {
    if (child_count[v] == 0) tree.leaves_.push_back(v);
  }

  std::vector<int> position(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) position[tree.order_[i]] = i;
  tree.order_parent_.assign(static_cast<std::size_t>(n) + 1, 0);
  tree.order_leaf_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int v = tree.order_[i];
    tree.order_parent_[i] = position[tree.parent_[v]];
    tree.order_leaf_[i] = child_count[v] == 0;
  }
  return tree;
}

LeafCounts leaf_counts(const RootedTree& tree) {
  // Bottom-up over breadth-first positions, where parent positions are
  // non-decreasing; one scatter back to id order at the end.
  const int n = tree.edge_count();
  const std::vector<int>& order = tree.top_down_order();
  const std::vector<int>& up = tree.order_parent_;
  const std::vector<char>& leaf = tree.order_leaf_;
  std::vector<std::int64_t> below(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n; i >= 1; --i) {
    below[i] += leaf[i];
    below[up[i]] += below[i];
  }
  LeafCounts counts(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) counts[order[i] - 1] = below[i];
  return counts;
}

}  // namespace srdi
