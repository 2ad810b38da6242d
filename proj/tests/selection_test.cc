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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "srdi/scalar.hpp"
#include "srdi/selection.hpp"

namespace srdi {
namespace {

constexpr SelectEngine kEngines[] = {SelectEngine::kQuickselect, SelectEngine::kMedianOfMedians};

std::vector<Scored<double>> scored(std::initializer_list<std::pair<int, double>> items) {
  std::vector<Scored<double>> out;
  for (auto [id, v] : items) out.push_back({id, v});
  return out;
}

TEST(NthLargest, Examples) {
  for (SelectEngine engine : kEngines) {
    auto a = scored({{1, 4}, {2, 1}, {3, 2}});
    auto r = nth_largest(std::span<const Scored<double>>(a), 1, engine);
    EXPECT_EQ(r.threshold, 4);
    EXPECT_EQ(r.chosen_ids, std::vector<int>({1}));

    auto b = scored({{1, 4}, {2, 4}, {3, 2}});
    r = nth_largest(std::span<const Scored<double>>(b), 1, engine);
    EXPECT_EQ(r.chosen_ids, std::vector<int>({1}));

    auto c = scored({{1, 5}, {2, 3}, {3, 3}, {4, 1}});
    r = nth_largest(std::span<const Scored<double>>(c), 3, engine);
    EXPECT_EQ(r.threshold, 3);
    EXPECT_EQ(r.chosen_ids, std::vector<int>({1, 2, 3}));
  }
}

TEST(NthLargest, RejectsBadCount) {
  auto a = scored({{1, 4}, {2, 1}});
  EXPECT_THROW(nth_largest(std::span<const Scored<double>>(a), 0), Error);
  EXPECT_THROW(nth_largest(std::span<const Scored<double>>(a), 3), Error);
}

// Against a full sort with the same (value desc, id asc) order, including
// heavy ties and adversarial layouts.
TEST(NthLargest, MatchesFullSort) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 2000; ++round) {
    const int size = 1 + static_cast<int>(rng() % 60);
    const int distinct = 1 + static_cast<int>(rng() % 8);
    std::vector<Scored<double>> items;
    for (int i = 0; i < size; ++i) {
      double v = static_cast<double>(rng() % distinct);
      if (round % 3 == 1) v = static_cast<double>(i);         // sorted ascending
      if (round % 3 == 2) v = static_cast<double>(size - i);  // sorted descending
      items.push_back({i + 1, v});
    }
    std::shuffle(items.begin(), items.end(), rng);
    const auto count = 1 + static_cast<std::size_t>(rng() % size);

    auto sorted = items;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.value != b.value ? a.value > b.value : a.id < b.id;
    });
    std::vector<int> want;
    for (std::size_t i = 0; i < count; ++i) want.push_back(sorted[i].id);
    std::sort(want.begin(), want.end());

    for (SelectEngine engine : kEngines) {
      const auto r = nth_largest(std::span<const Scored<double>>(items), count, engine);
      EXPECT_EQ(r.chosen_ids, want);
      EXPECT_EQ(r.threshold, sorted[count - 1].value);
    }
  }
}

TEST(PartitionTop, RationalValues) {
  std::vector<Scored<Rational>> items = {
      {1, Rational(1, 3)}, {2, Rational(2, 6)}, {3, Rational(1, 2)}, {4, Rational(0)}};
  partition_top(std::span<Scored<Rational>>(items), 2, SelectEngine::kMedianOfMedians);
  std::vector<int> top = {items[0].id, items[1].id};
  std::sort(top.begin(), top.end());
  EXPECT_EQ(top, std::vector<int>({1, 3}));
}

}  // namespace
}  // namespace srdi
