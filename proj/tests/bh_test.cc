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

#include "srdi/bh.hpp"
#include "test_util.hpp"

namespace srdi {
namespace {

using testing::broom;
using testing::broom_attrs;

TEST(SdiptBh, Broom) {
  const auto r = sdipt_bh(broom(), broom_attrs(), 1.0);
  EXPECT_EQ(r.weights, WeightVector<double>({3, 1, 5}));
  EXPECT_EQ(r.objective, 12.0);
  EXPECT_EQ(r.cost, 1.0);
}

TEST(SdiptBh, BudgetExtremes) {
  EXPECT_EQ(sdipt_bh(broom(), broom_attrs(), 0.5).weights, broom_attrs().w);
  const auto all = sdipt_bh(broom(), broom_attrs(), 2.0);
  EXPECT_EQ(all.weights, broom_attrs().u);
  EXPECT_EQ(all.objective, 13.0);
}

TEST(SdiptcBh, Broom) {
  const auto one = sdiptc_bh(broom(), broom_attrs(), 1.0, 1);
  EXPECT_EQ(one.objective, 8.0);
  EXPECT_EQ(one.modified_edges, std::vector<int>({1}));
  EXPECT_EQ(sdiptc_bh(broom(), broom_attrs(), 1.0, 2).objective, 12.0);
  EXPECT_TRUE(sdiptc_bh(broom(), broom_attrs(), 0.0, 2).modified_edges.empty());
}

TEST(McsdiptBh, Broom) {
  const auto r = mcsdipt_bh(broom(), broom_attrs(), 9.0);
  EXPECT_EQ(r.status, Status::kFeasible);
  EXPECT_EQ(r.cost, 1.0);
  EXPECT_EQ(r.modified_edges, std::vector<int>({1, 3}));
  EXPECT_EQ(r.srd_value, 12.0);
}

TEST(McsdiptBh, Boundaries) {
  const auto done = mcsdipt_bh(broom(), broom_attrs(), 4.0);
  EXPECT_EQ(done.status, Status::kAlreadySatisfied);
  EXPECT_EQ(done.cost, 0.0);
  EXPECT_TRUE(done.modified_edges.empty());
  const auto top = mcsdipt_bh(broom(), broom_attrs(), 13.0);
  EXPECT_EQ(top.status, Status::kFeasible);
  EXPECT_EQ(top.cost, 2.0);
  EXPECT_EQ(top.weights, broom_attrs().u);
  EXPECT_EQ(mcsdipt_bh(broom(), broom_attrs(), 14.0).status, Status::kInfeasible);
}

TEST(McsdiptBh, ZeroGainEdgesDoNotRaiseCost) {
  // The cheapest edge has no room; the cost is that of the edge that helps.
  const auto tree = testing::star(2);
  const EdgeAttrs<double> attrs{{1, 1}, {1, 2}, {1, 3}};
  const auto r = mcsdipt_bh(tree, attrs, 3.0);
  EXPECT_EQ(r.cost, 3.0);
  EXPECT_EQ(r.modified_edges, std::vector<int>({2}));
}

TEST(McsdiptcBh, Broom) {
  EXPECT_EQ(mcsdiptc_bh(broom(), broom_attrs(), 9.0, 2).cost, 1.0);
  EXPECT_EQ(mcsdiptc_bh(broom(), broom_attrs(), 9.0, 1).status, Status::kInfeasible);
}

TEST(McsdiptcBh, StarBisection) {
  const auto tree = testing::star(4);
  const EdgeAttrs<double> attrs{{0, 0, 0, 0}, {1, 1, 1, 1}, {4, 3, 2, 1}};
  for (SelectEngine engine : {SelectEngine::kQuickselect, SelectEngine::kMedianOfMedians}) {
    const auto r = mcsdiptc_bh(tree, attrs, 2.0, 2, engine);
    EXPECT_EQ(r.cost, 2.0);
    EXPECT_EQ(r.modified_edges, std::vector<int>({3, 4}));
  }
}

}  // namespace
}  // namespace srdi
