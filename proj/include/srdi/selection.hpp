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

#ifndef SRDI_SELECTION_HPP_
#define SRDI_SELECTION_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srdi/error.hpp"
#include "srdi/scalar.hpp"

namespace srdi {

template <Scalar S>
struct Scored {
  int id = 0;
  S value{};
};

template <Scalar S>
struct SelectionResult {
  S threshold{};
  std::vector<int> chosen_ids;  // ascending
};

enum class SelectEngine {
  kQuickselect,      // randomized, fixed seed; expected linear time
  kMedianOfMedians,  // worst-case linear time
};

namespace detail {

// Larger value first; equal values by ascending id. A strict total order
// because ids are unique.
template <Scalar S>
bool ranks_before(const Scored<S>& a, const Scored<S>& b) {
  if (a.value != b.value) return a.value > b.value;
  return a.id < b.id;
}

// Lomuto partition around items[pivot]; returns the pivot's final slot.
template <Scalar S>
std::size_t partition_around(std::span<Scored<S>> items, std::size_t pivot) {
  const std::size_t last = items.size() - 1;
  std::swap(items[pivot], items[last]);
  std::size_t store = 0;
  for (std::size_t i = 0; i < last; ++i) {
    if (ranks_before(items[i], items[last])) std::swap(items[i], items[store++]);
  }
  std::swap(items[store], items[last]);
  return store;
}

template <Scalar S>
void insertion_sort(std::span<Scored<S>> items) {
  for (std::size_t i = 1; i < items.size(); ++i) {
    for (std::size_t j = i; j > 0 && ranks_before(items[j], items[j - 1]); --j) {
      std::swap(items[j], items[j - 1]);
    }
  }
}

template <Scalar S>
std::size_t median_of_medians_pivot(std::span<Scored<S>> items);

// Rearranges `items` so that the element of rank k sits at index k, with
// every element ranking before it at lower indices.
template <Scalar S>
void select_rank(std::span<Scored<S>> items, std::size_t k, SelectEngine engine,
                 std::mt19937_64& rng) {
  while (items.size() > 1) {
    if (items.size() <= 16) {
      insertion_sort(items);
      return;
    }
    std::size_t pivot;
    if (engine == SelectEngine::kQuickselect) {
      pivot = std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng);
    } else {
      pivot = median_of_medians_pivot(items);
    }
    const std::size_t slot = partition_around(items, pivot);
    if (slot == k) return;
    if (k < slot) {
      items = items.first(slot);
    } else {
      items = items.subspan(slot + 1);
      k -= slot + 1;
    }
  }
}

template <Scalar S>
std::size_t median_of_medians_pivot(std::span<Scored<S>> items) {
  // Gather group medians at the front, then select their median in place.
  std::size_t medians = 0;
  for (std::size_t begin = 0; begin < items.size(); begin += 5) {
    const std::size_t len = std::min<std::size_t>(5, items.size() - begin);
    std::span<Scored<S>> group = items.subspan(begin, len);
    insertion_sort(group);
    std::swap(items[medians++], group[len / 2]);
  }
  std::mt19937_64 unused;
  select_rank(items.first(medians), medians / 2, SelectEngine::kMedianOfMedians, unused);
  return medians / 2;
}

inline constexpr std::uint64_t kSelectionSeed = 0x9e3779b97f4a7c15ULL;

}  // namespace detail

// Partially reorders `items` so that its first `count` entries are the
// `count` largest under the (value desc, id asc) order. Linear time.
template <Scalar S>
void partition_top(std::span<Scored<S>> items, std::size_t count,
                   SelectEngine engine = SelectEngine::kQuickselect) {
  if (count == 0 || count >= items.size()) return;
  std::mt19937_64 rng(detail::kSelectionSeed);
  detail::select_rank(items, count - 1, engine, rng);
}

// The `count`-th largest value and exactly `count` ids carrying the largest
// values; among equal values smaller ids win.
template <Scalar S>
SelectionResult<S> nth_largest(std::span<const Scored<S>> values, std::size_t count,
                               SelectEngine engine = SelectEngine::kQuickselect) {
  if (count < 1 || count > values.size()) {
    throw Error(ErrorCode::kNOutOfRange, "N = " + std::to_string(count) + " outside 1.." +
                                             std::to_string(values.size()));
  }
  std::vector<Scored<S>> items(values.begin(), values.end());
  partition_top(std::span<Scored<S>>(items), count, engine);
  SelectionResult<S> result;
  result.threshold = items[0].value;
  result.chosen_ids.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    result.chosen_ids.push_back(items[i].id);
    if (items[i].value < result.threshold) result.threshold = items[i].value;
  }
  std::sort(result.chosen_ids.begin(), result.chosen_ids.end());
  return result;
}

}  // namespace srdi

#endif  // SRDI_SELECTION_HPP_
