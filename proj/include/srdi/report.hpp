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

#ifndef SRDI_REPORT_HPP_
#define SRDI_REPORT_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <string_view>
#include <vector>

#include "srdi/scalar.hpp"
#include "srdi/tree.hpp"

namespace srdi {

enum class Status { kFeasible, kInfeasible, kAlreadySatisfied };

inline std::string_view to_string(Status status) {
  switch (status) {
    case Status::kFeasible: return "feasible";
    case Status::kInfeasible: return "infeasible";
    case Status::kAlreadySatisfied: return "already_satisfied";
  }
  return "unknown";
}

template <Scalar S>
struct SolveReport {
  Status status = Status::kFeasible;
  WeightVector<S> weights;  // empty when infeasible
  // SRD for the max problems, cost for the min-cost problems.
  S objective{};
  S cost{};
  S srd_value{};
  std::vector<int> modified_edges;  // ascending ids
  int iterations = 0;
  // Breakpoint index k* of the min-cost searches.
  std::optional<std::size_t> breakpoint;
  // Per-iteration costs of the cardinality-constrained l-infinity search.
  std::vector<S> cost_trace;
  bool iteration_cap_hit = false;
};

// max_e c(e) (x(e) - w(e)); 0 on the zero vector.
template <Scalar S>
S linf_cost(const EdgeAttrs<S>& attrs, const WeightVector<S>& x) {
  S best(0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    S v = attrs.c[k] * (x[k] - attrs.w[k]);
    if (v > best) best = v;
  }
  return best;
}

// max{c(e) : x(e) != w(e)}; 0 if nothing changed.
template <Scalar S>
S bh_cost(const EdgeAttrs<S>& attrs, const WeightVector<S>& x) {
  S best(0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (ScalarTraits<S>::differs(x[k], attrs.w[k]) && attrs.c[k] > best) best = attrs.c[k];
  }
  return best;
}

// Per-edge scores and the orders the searches walk. Orders break ties by
// ascending edge id.
template <Scalar S>
struct EdgeScoreTable {
  LeafCounts leaves;
  std::vector<S> full_cost;      // F(e) = c(e) (u(e) - w(e))
  std::vector<S> max_gain;       // S(e) = |L(e)| (u(e) - w(e))
  std::vector<S> gain_per_cost;  // nu(e) = |L(e)| / c(e)
  std::vector<int> by_full_cost;      // F ascending
  std::vector<int> by_max_gain;       // S descending
  std::vector<int> by_gain_per_cost;  // nu descending
  std::vector<int> by_unit_cost;      // c ascending

  enum Orders : unsigned {
    kNone = 0,
    kByFullCost = 1,
    kByMaxGain = 2,
    kByGainPerCost = 4,
    kByUnitCost = 8,
  };

  // Orders hold 0-based edge indices.
  static EdgeScoreTable build(LeafCounts leaf_counts, const EdgeAttrs<S>& attrs,
                              unsigned orders = kNone) {
    EdgeScoreTable t;
    const std::size_t n = attrs.size();
    t.leaves = std::move(leaf_counts);
    t.full_cost.resize(n);
    t.max_gain.resize(n);
    t.gain_per_cost.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      const S gap = attrs.u[k] - attrs.w[k];
      t.full_cost[k] = attrs.c[k] * gap;
      t.max_gain[k] = S(t.leaves[k]) * gap;
      t.gain_per_cost[k] = S(t.leaves[k]) / attrs.c[k];
    }
    auto sorted = [n](auto before) {
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (before(a, b)) return true;
        if (before(b, a)) return false;
        return a < b;
      });
      return idx;
    };
    if (orders & kByFullCost) {
      t.by_full_cost = sorted([&](int a, int b) { return t.full_cost[a] < t.full_cost[b]; });
    }
    if (orders & kByMaxGain) {
      t.by_max_gain = sorted([&](int a, int b) { return t.max_gain[a] > t.max_gain[b]; });
    }
    if (orders & kByGainPerCost) {
      t.by_gain_per_cost =
          sorted([&](int a, int b) { return t.gain_per_cost[a] > t.gain_per_cost[b]; });
    }
    if (orders & kByUnitCost) {
      t.by_unit_cost = sorted([&](int a, int b) { return attrs.c[a] < attrs.c[b]; });
    }
    return t;
  }
};

namespace detail {

template <Scalar S>
void fill_outcome(SolveReport<S>& report, const LeafCounts& leaves, const EdgeAttrs<S>& attrs) {
  report.srd_value = srd(leaves, report.weights);
  report.modified_edges = modified_edges(report.weights, attrs);
}

template <Scalar S>
SolveReport<S> infeasible_report() {
  SolveReport<S> report;
  report.status = Status::kInfeasible;
  return report;
}

template <Scalar S>
SolveReport<S> unchanged_report(const LeafCounts& leaves, const EdgeAttrs<S>& attrs) {
  SolveReport<S> report;
  report.status = Status::kAlreadySatisfied;
  report.weights = attrs.w;
  report.objective = S(0);
  report.cost = S(0);
  fill_outcome(report, leaves, attrs);
  return report;
}

}  // namespace detail
}  // namespace srdi

#endif  // SRDI_REPORT_HPP_
