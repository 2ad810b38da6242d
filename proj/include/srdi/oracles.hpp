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

#ifndef SRDI_ORACLES_HPP_
#define SRDI_ORACLES_HPP_

// Exhaustive and parametric reference solvers for small instances. They only
// share the tree primitives with the production solvers and are meant for
// tests and verification campaigns.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srdi/error.hpp"
#include "srdi/scalar.hpp"
#include "srdi/tree.hpp"

namespace srdi::oracle {

template <Scalar S>
struct OracleResult {
  bool feasible = true;
  S objective{};
  std::vector<int> witness_set;  // ascending edge ids
  WeightVector<S> witness_weights;
};

// SRD by walking every root-leaf path.
template <Scalar S>
S srd_by_paths(const RootedTree& tree, const WeightVector<S>& weights) {
  S total(0);
  for (int leaf : tree.leaves()) {
    for (int v = leaf; v != 0; v = tree.parent(v)) total += weights[v - 1];
  }
  return total;
}

namespace detail {

inline void guard(int n, int limit, std::string_view who) {
  if (n > limit) {
    throw Error(ErrorCode::kInstanceTooLarge, std::string(who) + " supports at most " +
                                                  std::to_string(limit) + " edges, got " +
                                                  std::to_string(n));
  }
}

inline std::vector<int> mask_ids(std::uint32_t mask) {
  std::vector<int> ids;
  for (int k = 0; mask != 0; ++k, mask >>= 1) {
    if (mask & 1U) ids.push_back(k + 1);
  }
  return ids;
}

// Minimal C with sum_e |L(e)| min{u(e) - w(e), C / c(e)} >= deficit, by
// bisection to 1e-12.
inline double bisect_cost(const LeafCounts& leaves, const EdgeAttrs<double>& attrs,
                          double deficit) {
  auto reach = [&](double level) {
    double total = 0;
    for (std::size_t e = 0; e < attrs.size(); ++e) {
      total += static_cast<double>(leaves[e]) *
               std::min(attrs.u[e] - attrs.w[e], level / attrs.c[e]);
    }
    return total;
  };
  double lo = 0;
  double hi = 0;
  for (std::size_t e = 0; e < attrs.size(); ++e) {
    hi = std::max(hi, attrs.c[e] * (attrs.u[e] - attrs.w[e]));
  }
  for (int iter = 0; iter < 400 && hi - lo > 1e-12; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (reach(mid) >= deficit) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

inline WeightVector<double> weights_at_level(const EdgeAttrs<double>& attrs, double level) {
  WeightVector<double> x(attrs.size());
  for (std::size_t e = 0; e < attrs.size(); ++e) {
    const double step = level / attrs.c[e];
    x[e] = step >= attrs.u[e] - attrs.w[e] ? attrs.u[e] : attrs.w[e] + step;
  }
  return x;
}

}  // namespace detail

// Best subset of at most N edges, each raised by min{K / c(e), u(e) - w(e)}.
template <Scalar S>
OracleResult<S> brute_sdiptc_inf(const RootedTree& tree, const EdgeAttrs<S>& attrs,
                                 const S& budget, int max_edges) {
  const int n = tree.edge_count();
  detail::guard(n, 20, "brute_sdiptc_inf");
  const LeafCounts leaves = leaf_counts(tree);
  std::vector<S> step(attrs.size());
  std::vector<S> gain(attrs.size());
  for (std::size_t e = 0; e < attrs.size(); ++e) {
    const S room = attrs.u[e] - attrs.w[e];
    const S afford = budget / attrs.c[e];
    step[e] = afford < room ? afford : room;
    gain[e] = S(leaves[e]) * step[e];
  }
  std::uint32_t best_mask = 0;
  S best_gain(0);
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (std::popcount(mask) > max_edges) continue;
    S total(0);
    for (int e = 0; e < n; ++e) {
      if (mask & (1U << e)) total += gain[e];
    }
    if (total > best_gain) {
      best_gain = total;
      best_mask = mask;
    }
  }
  OracleResult<S> result;
  result.witness_weights = attrs.w;
  for (int id : detail::mask_ids(best_mask)) {
    if (step[id - 1] > 0) {
      result.witness_set.push_back(id);
      result.witness_weights[id - 1] =
          step[id - 1] == attrs.u[id - 1] - attrs.w[id - 1] ? attrs.u[id - 1]
                                                            : attrs.w[id - 1] + step[id - 1];
    }
  }
  result.objective = srd_by_paths(tree, result.witness_weights);
  return result;
}

// Per-edge grid search: for each edge the largest grid increment
// (u - w) i / steps whose cost fits the budget. A lower bound on the optimum.
inline OracleResult<double> grid_sdipt_inf(const RootedTree& tree,
                                           const EdgeAttrs<double>& attrs, double budget,
                                           int steps = 10000) {
  OracleResult<double> result;
  result.witness_weights = attrs.w;
  for (std::size_t e = 0; e < attrs.size(); ++e) {
    const double room = attrs.u[e] - attrs.w[e];
    double best = 0;
    for (int i = 0; i <= steps; ++i) {
      const double x = room * i / steps;
      if (attrs.c[e] * x <= budget) best = x;
    }
    result.witness_weights[e] = attrs.w[e] + best;
    if (best > 0) result.witness_set.push_back(static_cast<int>(e) + 1);
  }
  result.objective = srd_by_paths(tree, result.witness_weights);
  return result;
}

// Minimum l-infinity cost for w(T) < D <= u(T) by bisection on the cost level.
inline OracleResult<double> parametric_mcsdipt_inf(const RootedTree& tree,
                                                   const EdgeAttrs<double>& attrs,
                                                   double demand) {
  const double base = srd_by_paths(tree, attrs.w);
  const double top = srd_by_paths(tree, attrs.u);
  if (!(base < demand) || !(demand <= top)) {
    throw Error(ErrorCode::kDemandOutOfRange, "parametric oracle needs w(T) < D <= u(T)");
  }
  const double level = detail::bisect_cost(leaf_counts(tree), attrs, demand - base);
  OracleResult<double> result;
  result.objective = level;
  result.witness_weights = detail::weights_at_level(attrs, level);
  result.witness_set = modified_edges(result.witness_weights, attrs);
  return result;
}

// Minimum l-infinity cost with at most N changed edges: every subset of at
// most N edges whose full gain covers the deficit, each solved parametrically
// with the other edges frozen.
inline OracleResult<double> brute_mcsdiptc_inf(const RootedTree& tree,
                                               const EdgeAttrs<double>& attrs, double demand,
                                               int max_edges) {
  const int n = tree.edge_count();
  detail::guard(n, 12, "brute_mcsdiptc_inf");
  if (max_edges > 4) {
    throw Error(ErrorCode::kInstanceTooLarge, "brute_mcsdiptc_inf supports N <= 4");
  }
  const double base = srd_by_paths(tree, attrs.w);
  OracleResult<double> result;
  if (demand <= base) {
    result.objective = 0;
    result.witness_weights = attrs.w;
    return result;
  }
  const double deficit = demand - base;
  const LeafCounts leaves = leaf_counts(tree);
  std::optional<double> best;
  std::uint32_t best_mask = 0;
  EdgeAttrs<double> restricted = attrs;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (std::popcount(mask) > max_edges) continue;
    double full = 0;
    for (int e = 0; e < n; ++e) {
      restricted.u[e] = (mask & (1U << e)) ? attrs.u[e] : attrs.w[e];
      full += static_cast<double>(leaves[e]) * (restricted.u[e] - attrs.w[e]);
    }
    if (full < deficit - ScalarTraits<double>::slack(demand)) continue;
    const double level = detail::bisect_cost(leaves, restricted, deficit);
    if (!best || level < *best) {
      best = level;
      best_mask = mask;
    }
  }
  if (!best) {
    result.feasible = false;
    return result;
  }
  for (int e = 0; e < n; ++e) {
    restricted.u[e] = (best_mask & (1U << e)) ? attrs.u[e] : attrs.w[e];
  }
  result.objective = *best;
  result.witness_weights = detail::weights_at_level(restricted, *best);
  result.witness_set = modified_edges(result.witness_weights, attrs);
  return result;
}

enum class BhProblem { kSdipt, kSdiptc, kMcsdipt, kMcsdiptc };

std::optional<BhProblem> parse_bh_problem(std::string_view tag);

template <Scalar S>
struct BhParams {
  S budget{};
  S demand{};
  int max_edges = 0;
};

// Exhausts every subset A of edges raised to u. Max problems maximise the SRD
// subject to c(e) <= K on A; min-cost problems minimise max_{e in A} c(e)
// subject to SRD >= D. Cardinality variants require |A| <= N.
template <Scalar S>
OracleResult<S> brute_bh(const RootedTree& tree, const EdgeAttrs<S>& attrs, BhProblem problem,
                         const BhParams<S>& params) {
  const int n = tree.edge_count();
  detail::guard(n, 12, "brute_bh");
  const bool maximize = problem == BhProblem::kSdipt || problem == BhProblem::kSdiptc;
  const bool cardinality = problem == BhProblem::kSdiptc || problem == BhProblem::kMcsdiptc;

  std::optional<S> best;
  std::uint32_t best_mask = 0;
  WeightVector<S> x = attrs.w;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (cardinality && std::popcount(mask) > params.max_edges) continue;
    S cost(0);
    bool affordable = true;
    for (int e = 0; e < n; ++e) {
      const bool up = mask & (1U << e);
      x[e] = up ? attrs.u[e] : attrs.w[e];
      if (!up) continue;
      if (attrs.c[e] > cost) cost = attrs.c[e];
      if (attrs.c[e] > params.budget) affordable = false;
    }
    if (maximize) {
      if (!affordable) continue;
      const S value = srd_by_paths(tree, x);
      if (!best || value > *best) {
        best = value;
        best_mask = mask;
      }
    } else {
      const S value = srd_by_paths(tree, x);
      if (value < params.demand - ScalarTraits<S>::slack(params.demand)) continue;
      // Ties go to the smaller subset.
      if (!best || cost < *best ||
          (cost == *best && std::popcount(mask) < std::popcount(best_mask))) {
        best = cost;
        best_mask = mask;
      }
    }
  }

  OracleResult<S> result;
  if (!best) {
    result.feasible = false;
    return result;
  }
  result.objective = *best;
  result.witness_weights = attrs.w;
  for (int id : detail::mask_ids(best_mask)) result.witness_weights[id - 1] = attrs.u[id - 1];
  result.witness_set = modified_edges(result.witness_weights, attrs);
  return result;
}

template <Scalar S>
OracleResult<S> brute_bh(const RootedTree& tree, const EdgeAttrs<S>& attrs,
                         std::string_view tag, const BhParams<S>& params) {
  const std::optional<BhProblem> problem = parse_bh_problem(tag);
  if (!problem) {
    throw Error(ErrorCode::kUnknownProblemTag, "unknown BH problem '" + std::string(tag) + "'");
  }
  return brute_bh(tree, attrs, *problem, params);
}

}  // namespace srdi::oracle

#endif  // SRDI_ORACLES_HPP_
