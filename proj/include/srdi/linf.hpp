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

#ifndef SRDI_LINF_HPP_
#define SRDI_LINF_HPP_

// Edge-upgrade interdiction of the sum of root-leaf distances under the
// weighted l-infinity cost max_e c(e) (x(e) - w(e)).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srdi/error.hpp"
#include "srdi/report.hpp"
#include "srdi/scalar.hpp"
#include "srdi/selection.hpp"
#include "srdi/tree.hpp"

namespace srdi {
namespace detail {

template <Scalar S>
void check_budget(const S& budget) {
  if (budget < 0) throw Error(ErrorCode::kNegativeBudget, "budget K must be nonnegative");
}

inline void check_cardinality(long long count, int edges) {
  if (count < 1 || count > edges) {
    throw Error(ErrorCode::kNOutOfRange,
                "N = " + std::to_string(count) + " outside 1.." + std::to_string(edges));
  }
}

// Each edge raised by min{K / c(e), u(e) - w(e)}.
template <Scalar S>
WeightVector<S> budget_weights(const EdgeAttrs<S>& attrs, const S& budget) {
  WeightVector<S> x(attrs.size());
  for (std::size_t k = 0; k < attrs.size(); ++k) {
    const S step = budget / attrs.c[k];
    x[k] = step >= attrs.u[k] - attrs.w[k] ? attrs.u[k] : attrs.w[k] + step;
  }
  return x;
}

// Unique minimum-cost vector reaching SRD `demand`. Edges are ordered by
// full-upgrade cost F; the breakpoint k* is the largest k with
// f(k) < demand - w(T), where f(k) is the SRD gain when every edge may spend
// F(e_{m_k}) (f(0) = 0). Edges before the breakpoint saturate at u, the rest
// share the remaining gain at a common cost level.
template <Scalar S>
SolveReport<S> min_cost_linf(const LeafCounts& leaves, const EdgeAttrs<S>& attrs,
                             const S& demand) {
  const S base = srd(leaves, attrs.w);
  if (demand <= base) return unchanged_report(leaves, attrs);
  if (srd(leaves, attrs.u) < demand - ScalarTraits<S>::slack(demand)) {
    return infeasible_report<S>();
  }
  const S deficit = demand - base;
  const std::size_t n = attrs.size();
  const auto table = EdgeScoreTable<S>::build(leaves, attrs, EdgeScoreTable<S>::kByFullCost);
  const std::vector<int>& order = table.by_full_cost;

  auto level_at = [&](std::size_t k) { return k == 0 ? S(0) : table.full_cost[order[k - 1]]; };
  auto gain_at = [&](std::size_t k) {
    if (k == 0) return S(0);
    const S level = level_at(k);
    S total(0);
    for (std::size_t e = 0; e < n; ++e) {
      if (table.full_cost[e] <= level) {
        total += table.max_gain[e];
      } else {
        total += S(leaves[e]) * (level / attrs.c[e]);
      }
    }
    return total;
  };

  // f is non-decreasing and f(n) = u(T) - w(T) covers the deficit.
  std::size_t lo = 0;
  std::size_t hi = n;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (gain_at(mid) >= deficit) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const std::size_t breakpoint = lo;

  const S level = level_at(breakpoint);
  const S remainder = deficit - gain_at(breakpoint);
  S rate(0);
  for (std::size_t j = breakpoint; j < n; ++j) {
    rate += S(leaves[order[j]]) / attrs.c[order[j]];
  }

  SolveReport<S> report;
  report.weights = attrs.w;
  for (std::size_t j = 0; j < breakpoint; ++j) report.weights[order[j]] = attrs.u[order[j]];
  for (std::size_t j = breakpoint; j < n; ++j) {
    const int e = order[j];
    S x = attrs.w[e] + level / attrs.c[e] + remainder / (attrs.c[e] * rate);
    if constexpr (!ScalarTraits<S>::kExact) {
      if (x > attrs.u[e]) x = attrs.u[e];
    }
    report.weights[e] = x;
  }
  report.cost = level + remainder / rate;
  report.objective = report.cost;
  report.breakpoint = breakpoint;
  fill_outcome(report, leaves, attrs);
  return report;
}

// Max segment tree over positions of `order`; inactive positions are ignored.
// Answers "first position before `end` whose value beats a threshold".
template <Scalar S>
class CandidateTree {
 public:
  explicit CandidateTree(const std::vector<int>& order) : order_(order) {
    while (width_ < order.size()) width_ *= 2;
    value_.assign(2 * width_, S(0));
    active_.assign(2 * width_, 0);
  }

  template <typename Pred>
  void assign(const std::vector<S>& values, Pred eligible) {
    for (std::size_t i = 0; i < width_; ++i) {
      const bool on = i < order_.size() && eligible(order_[i]);
      active_[width_ + i] = on;
      value_[width_ + i] = on ? values[order_[i]] : S(0);
    }
    for (std::size_t node = width_ - 1; node >= 1; --node) pull(node);
  }

  void set(std::size_t pos, const S& value) {
    active_[width_ + pos] = 1;
    value_[width_ + pos] = value;
    for (std::size_t node = (width_ + pos) / 2; node >= 1; node /= 2) pull(node);
  }

  void clear(std::size_t pos) {
    active_[width_ + pos] = 0;
    for (std::size_t node = (width_ + pos) / 2; node >= 1; node /= 2) pull(node);
  }

  // Leftmost active position p < end with value >= threshold (inclusive) or
  // value > threshold.
  std::optional<std::size_t> leftmost(std::size_t end, const S& threshold, bool inclusive) const {
    return descend(1, 0, width_, end, threshold, inclusive);
  }

 private:
  void pull(std::size_t node) {
    const std::size_t l = 2 * node;
    const std::size_t r = l + 1;
    active_[node] = active_[l] || active_[r];
    if (!active_[l]) {
      value_[node] = value_[r];
    } else if (!active_[r]) {
      value_[node] = value_[l];
    } else {
      value_[node] = value_[l] < value_[r] ? value_[r] : value_[l];
    }
  }

  std::optional<std::size_t> descend(std::size_t node, std::size_t lo, std::size_t hi,
                                     std::size_t end, const S& threshold, bool inclusive) const {
    if (lo >= end || !active_[node]) return std::nullopt;
    if (inclusive ? value_[node] < threshold : !(threshold < value_[node])) return std::nullopt;
    if (hi - lo == 1) return lo;
    const std::size_t mid = lo + (hi - lo) / 2;
    if (auto left = descend(2 * node, lo, mid, end, threshold, inclusive)) return left;
    return descend(2 * node + 1, mid, hi, end, threshold, inclusive);
  }

  const std::vector<int>& order_;
  std::size_t width_ = 1;
  std::vector<S> value_;
  std::vector<char> active_;
};

}  // namespace detail

// Max SRD with every edge cost c(e) (x(e) - w(e)) at most `budget`.
template <Scalar S>
SolveReport<S> sdipt_inf(const RootedTree& tree, const EdgeAttrs<S>& attrs, const S& budget) {
  detail::check_budget(budget);
  const LeafCounts leaves = leaf_counts(tree);
  SolveReport<S> report;
  report.weights = detail::budget_weights(attrs, budget);
  report.cost = linf_cost(attrs, report.weights);
  detail::fill_outcome(report, leaves, attrs);
  report.objective = report.srd_value;
  return report;
}

// As sdipt_inf, but at most `max_edges` edges change: the budget-limited
// upgrade is kept on the edges with the largest SRD gains.
template <Scalar S>
SolveReport<S> sdiptc_inf(const RootedTree& tree, const EdgeAttrs<S>& attrs, const S& budget,
                          long long max_edges,
                          SelectEngine engine = SelectEngine::kQuickselect) {
  detail::check_budget(budget);
  detail::check_cardinality(max_edges, tree.edge_count());
  const LeafCounts leaves = leaf_counts(tree);
  const WeightVector<S> full = detail::budget_weights(attrs, budget);

  std::vector<Scored<S>> gains(attrs.size());
  for (std::size_t k = 0; k < attrs.size(); ++k) {
    gains[k] = {static_cast<int>(k), S(leaves[k]) * (full[k] - attrs.w[k])};
  }
  const auto count = static_cast<std::size_t>(max_edges);
  partition_top(std::span<Scored<S>>(gains), count, engine);

  SolveReport<S> report;
  report.weights = attrs.w;
  for (std::size_t i = 0; i < count; ++i) report.weights[gains[i].id] = full[gains[i].id];
  report.cost = linf_cost(attrs, report.weights);
  detail::fill_outcome(report, leaves, attrs);
  report.objective = report.srd_value;
  return report;
}

// Min l-infinity cost reaching SRD >= `demand`.
template <Scalar S>
SolveReport<S> mcsdipt_inf(const RootedTree& tree, const EdgeAttrs<S>& attrs, const S& demand) {
  return detail::min_cost_linf(leaf_counts(tree), attrs, demand);
}

// Min l-infinity cost reaching SRD >= `demand` while changing at most
// `max_edges` edges. Starts from the edges with the largest full-upgrade
// gains S(e), solves the unconstrained problem restricted to that set, and
// swaps members for outside edges (scanned by descending gain per unit cost
// nu) while a swap cannot raise the cost:
//   - a member at the current cost level C yields to an edge with higher nu
//     whose capped gain min{S, nu C} is at least the member's;
//   - any other member yields to an edge with strictly larger capped gain.
// In float mode both gain comparisons carry the scalar slack. Stops after a
// pass without swaps.
template <Scalar S>
SolveReport<S> mcsdiptc_inf(const RootedTree& tree, const EdgeAttrs<S>& attrs, const S& demand,
                            long long max_edges) {
  const int n = tree.edge_count();
  detail::check_cardinality(max_edges, n);
  const LeafCounts leaves = leaf_counts(tree);
  const S base = srd(leaves, attrs.w);
  if (demand <= base) return detail::unchanged_report(leaves, attrs);
  const S deficit = demand - base;

  const auto table = EdgeScoreTable<S>::build(
      leaves, attrs, EdgeScoreTable<S>::kByMaxGain | EdgeScoreTable<S>::kByGainPerCost);
  const auto count = static_cast<std::size_t>(max_edges);
  S best_gain(0);
  for (std::size_t i = 0; i < count; ++i) best_gain += table.max_gain[table.by_max_gain[i]];
  if (best_gain < deficit - ScalarTraits<S>::slack(demand)) {
    return detail::infeasible_report<S>();
  }

  // Zero-gain edges never enter the set.
  std::vector<int> members;
  std::vector<char> in_set(attrs.size(), 0);
  for (std::size_t i = 0; i < count; ++i) {
    const int e = table.by_max_gain[i];
    if (table.max_gain[e] > 0) {
      members.push_back(e);
      in_set[e] = 1;
    }
  }

  const long long iteration_cap = static_cast<long long>(n) * max_edges;
  EdgeAttrs<S> restricted = attrs;
  std::vector<S> capped(attrs.size());
  const std::vector<int>& nu_order = table.by_gain_per_cost;
  std::vector<std::size_t> nu_rank(attrs.size());
  for (std::size_t i = 0; i < nu_order.size(); ++i) nu_rank[nu_order[i]] = i;
  detail::CandidateTree<S> candidates(nu_order);
  std::vector<S> trace;
  SolveReport<S> best;
  bool have_best = false;
  bool cap_hit = false;
  int iterations = 0;

  while (true) {
    for (std::size_t e = 0; e < attrs.size(); ++e) {
      restricted.u[e] = in_set[e] ? attrs.u[e] : attrs.w[e];
    }
    SolveReport<S> current = detail::min_cost_linf(leaves, restricted, demand);
    ++iterations;
    if (current.status == Status::kInfeasible) break;
    trace.push_back(current.cost);
    if (!have_best || current.cost <= best.cost) {
      best = current;
      have_best = true;
    }

    const S level = current.cost;
    const S tolerance = ScalarTraits<S>::slack(level);
    for (std::size_t e = 0; e < attrs.size(); ++e) {
      const S reach = S(leaves[e]) * level / attrs.c[e];
      capped[e] = reach < table.max_gain[e] ? reach : table.max_gain[e];
    }
    auto at_level = [&](int e) {
      S gap = attrs.c[e] * (current.weights[e] - attrs.w[e]) - level;
      if (gap < 0) gap = -gap;
      return gap <= tolerance;
    };

    candidates.assign(capped, [&](int e) { return !in_set[e] && table.max_gain[e] > 0; });

    bool swapped = false;
    for (std::size_t slot = 0; slot < members.size(); ++slot) {
      const int out = members[slot];
      std::optional<std::size_t> hit;
      if (at_level(out)) {
        // Only candidates with a strictly larger nu qualify.
        const auto end = std::partition_point(
            nu_order.begin(), nu_order.end(),
            [&](int e) { return table.gain_per_cost[out] < table.gain_per_cost[e]; });
        hit = candidates.leftmost(static_cast<std::size_t>(end - nu_order.begin()),
                                  capped[out] - ScalarTraits<S>::slack(capped[out]), true);
      } else {
        hit = candidates.leftmost(nu_order.size(),
                                  capped[out] + ScalarTraits<S>::slack(capped[out]), false);
      }
      if (!hit) continue;
      const int in = nu_order[*hit];
      in_set[out] = 0;
      in_set[in] = 1;
      members[slot] = in;
      candidates.clear(*hit);
      if (table.max_gain[out] > 0) candidates.set(nu_rank[out], capped[out]);
      swapped = true;
    }
    if (!swapped) {
      // The last solve already ran on the final set.
      best = std::move(current);
      break;
    }
    if (iterations >= iteration_cap) {
      cap_hit = true;
      break;
    }
  }

  if (!have_best) return detail::infeasible_report<S>();
  best.iterations = iterations;
  best.cost_trace = std::move(trace);
  best.iteration_cap_hit = cap_hit;
  best.breakpoint.reset();
  return best;
}

}  // namespace srdi

#endif  // SRDI_LINF_HPP_
