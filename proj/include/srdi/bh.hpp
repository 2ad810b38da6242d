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

#ifndef SRDI_BH_HPP_
#define SRDI_BH_HPP_

// Edge-upgrade interdiction of the sum of root-leaf distances under the
// weighted bottleneck Hamming cost max{c(e) : x(e) != w(e)}. Every optimal
// vector moves each edge either not at all or to u(e).

#include <span>
#include <vector>

#include "srdi/linf.hpp"
#include "srdi/report.hpp"
#include "srdi/selection.hpp"
#include "srdi/tree.hpp"

namespace srdi {
namespace detail {

template <Scalar S>
SolveReport<S> upgraded_report(const LeafCounts& leaves, const EdgeAttrs<S>& attrs,
                               std::span<const int> upgraded) {
  SolveReport<S> report;
  report.weights = attrs.w;
  for (int e : upgraded) report.weights[e] = attrs.u[e];
  report.cost = bh_cost(attrs, report.weights);
  fill_outcome(report, leaves, attrs);
  report.objective = report.srd_value;
  return report;
}

// Upgrades the cheapest prefix (by c, then id) whose total gain first covers
// the deficit; the cost is c of the last prefix edge.
template <Scalar S>
SolveReport<S> min_cost_bh(const LeafCounts& leaves, const EdgeAttrs<S>& attrs, const S& demand) {
  const S base = srd(leaves, attrs.w);
  if (demand <= base) return unchanged_report(leaves, attrs);
  if (srd(leaves, attrs.u) < demand - ScalarTraits<S>::slack(demand)) {
    return infeasible_report<S>();
  }
  const S deficit = demand - base;
  const auto table = EdgeScoreTable<S>::build(leaves, attrs, EdgeScoreTable<S>::kByUnitCost);
  const std::vector<int>& order = table.by_unit_cost;
  const std::size_t n = order.size();

  // g(k) for k = 1..n; the last positive-gain prefix covers the deficit.
  std::vector<S> prefix(n);
  S running(0);
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < n; ++i) {
    running += table.max_gain[order[i]];
    prefix[i] = running;
    if (table.max_gain[order[i]] > 0) last_positive = i;
  }
  std::size_t lo = 0;
  std::size_t hi = last_positive;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (prefix[mid] >= deficit) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::size_t last = lo;  // 0-based position of e_{alpha_{k*+1}}

  std::vector<int> upgraded;
  for (std::size_t i = 0; i <= last; ++i) {
    if (table.max_gain[order[i]] > 0) upgraded.push_back(order[i]);
  }
  SolveReport<S> report;
  report.weights = attrs.w;
  for (int e : upgraded) report.weights[e] = attrs.u[e];
  report.cost = attrs.c[order[last]];
  report.objective = report.cost;
  report.breakpoint = last;
  fill_outcome(report, leaves, attrs);
  return report;
}

}  // namespace detail

// Upgrade every edge whose flat cost fits the budget.
template <Scalar S>
SolveReport<S> sdipt_bh(const RootedTree& tree, const EdgeAttrs<S>& attrs, const S& budget) {
  detail::check_budget(budget);
  const LeafCounts leaves = leaf_counts(tree);
  std::vector<int> affordable;
  for (std::size_t e = 0; e < attrs.size(); ++e) {
    if (attrs.c[e] <= budget) affordable.push_back(static_cast<int>(e));
  }
  return detail::upgraded_report(leaves, attrs, affordable);
}

// Among affordable edges, upgrade the `max_edges` with the largest gains.
template <Scalar S>
SolveReport<S> sdiptc_bh(const RootedTree& tree, const EdgeAttrs<S>& attrs, const S& budget,
                         long long max_edges,
                         SelectEngine engine = SelectEngine::kQuickselect) {
  detail::check_budget(budget);
  detail::check_cardinality(max_edges, tree.edge_count());
  const LeafCounts leaves = leaf_counts(tree);
  std::vector<Scored<S>> affordable;
  for (std::size_t e = 0; e < attrs.size(); ++e) {
    if (attrs.c[e] <= budget) {
      affordable.push_back({static_cast<int>(e),
                            S(leaves[e]) * (attrs.u[e] - attrs.w[e])});
    }
  }
  const auto count = static_cast<std::size_t>(max_edges);
  if (affordable.size() > count) {
    partition_top(std::span<Scored<S>>(affordable), count, engine);
    affordable.resize(count);
  }
  std::vector<int> upgraded;
  for (const auto& s : affordable) upgraded.push_back(s.id);
  return detail::upgraded_report(leaves, attrs, upgraded);
}

template <Scalar S>
SolveReport<S> mcsdipt_bh(const RootedTree& tree, const EdgeAttrs<S>& attrs, const S& demand) {
  return detail::min_cost_bh(leaf_counts(tree), attrs, demand);
}

// Min bottleneck cost with at most `max_edges` upgrades. Falls back to a
// bisection over cost-ordered prefixes E_k, where h(k) is the total of the
// `max_edges` largest gains within E_k.
template <Scalar S>
SolveReport<S> mcsdiptc_bh(const RootedTree& tree, const EdgeAttrs<S>& attrs, const S& demand,
                           long long max_edges,
                           SelectEngine engine = SelectEngine::kQuickselect) {
  const int n = tree.edge_count();
  detail::check_cardinality(max_edges, n);
  const LeafCounts leaves = leaf_counts(tree);
  const S base = srd(leaves, attrs.w);
  if (demand <= base) return detail::unchanged_report(leaves, attrs);
  const S deficit = demand - base;
  const auto count = static_cast<std::size_t>(max_edges);

  const auto table = EdgeScoreTable<S>::build(leaves, attrs, EdgeScoreTable<S>::kByUnitCost);
  std::vector<Scored<S>> buffer(attrs.size());
  auto top_total = [&](std::size_t prefix) {
    for (std::size_t i = 0; i < prefix; ++i) {
      const int e = table.by_unit_cost[i];
      buffer[i] = {e, table.max_gain[e]};
    }
    std::span<Scored<S>> items(buffer.data(), prefix);
    partition_top(items, count, engine);
    S total(0);
    for (std::size_t i = 0; i < count; ++i) total += items[i].value;
    return total;
  };

  if (top_total(attrs.size()) < deficit - ScalarTraits<S>::slack(demand)) {
    return detail::infeasible_report<S>();
  }

  SolveReport<S> unconstrained = detail::min_cost_bh(leaves, attrs, demand);
  if (unconstrained.status == Status::kInfeasible ||
      unconstrained.modified_edges.size() <= count) {
    return unconstrained;
  }

  // h(k) for k in [count, n] is non-decreasing; h(n) covers the deficit.
  std::size_t lo = count - 1;
  std::size_t hi = attrs.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (top_total(mid) >= deficit) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const std::size_t prefix = hi;
  top_total(prefix);
  std::vector<int> upgraded;
  for (std::size_t i = 0; i < count; ++i) {
    if (buffer[i].value > 0) upgraded.push_back(buffer[i].id);
  }

  SolveReport<S> report;
  report.weights = attrs.w;
  for (int e : upgraded) report.weights[e] = attrs.u[e];
  report.cost = attrs.c[table.by_unit_cost[prefix - 1]];
  report.objective = report.cost;
  report.breakpoint = prefix;
  detail::fill_outcome(report, leaves, attrs);
  return report;
}

}  // namespace srdi

#endif  // SRDI_BH_HPP_
