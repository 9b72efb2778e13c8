// Copyright 2026 The hanzi-order Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hanzi_order/hanzi_order.hpp"
#include "support/fixtures.hpp"

namespace hanzi_order {
namespace {

using testing::compound;
using testing::primitive;

TEST(Cost, PrimitivesFromStrokes) {
  CostParams p;
  EXPECT_EQ(cost(primitive("口", 3), p), 1.3);
  EXPECT_EQ(cost(primitive("豕", 7), p), 1.7);
  EXPECT_EQ(cost(primitive("x-1", 0, GlyphKind::PrimitiveComponent), p), 1.0);
}

TEST(Cost, CompoundsCountCombinations) {
  CostParams p;
  EXPECT_EQ(cost(compound("的", {"白", "勺"}, 8), p), 1.0);
  EXPECT_EQ(cost(compound("茶", {"艹", "人", "木"}, 9), p), 2.0);
  EXPECT_EQ(cost(compound("品", {"口", "口", "口"}, 9), p), 2.0);
}

TEST(Cost, VariantsAndWords) {
  CostParams p;
  EXPECT_EQ(cost(testing::variant("灬", "火", 4), p), 1.0);
  p.variant_cost = 0.5;
  EXPECT_EQ(cost(testing::variant("灬", "火", 4), p), 0.5);
  EXPECT_EQ(cost(GlyphNode{"知道", GlyphKind::Word, {"知", "道"}, 0}, p), 1.0);
  EXPECT_EQ(cost(GlyphNode{"是不是", GlyphKind::Word, {"是", "不", "是"}, 0}, p), 2.0);
}

TEST(Cost, KnownAndSuppressed) {
  CostParams p;
  p.known.insert("口");
  p.suppression["日"] = 0.5;
  EXPECT_EQ(cost(primitive("口", 3), p), 0.0);
  EXPECT_DOUBLE_EQ(cost(primitive("日", 4), p), 0.7);
}

TEST(Cost, GammaZeroMakesPrimitivesUnit) {
  CostParams p;
  p.gamma = 0.0;
  for (int s = 0; s < 30; ++s) EXPECT_EQ(cost(primitive("a", s), p), 1.0);
}

TEST(Cost, ParamValidation) {
  CostParams p;
  p.gamma = -0.1;
  EXPECT_THROW(p.validate(), Error);
  p = {};
  p.suppression["a"] = 1.5;
  EXPECT_THROW(p.validate(), Error);
  p = {};
  p.variant_cost = 0.0;
  EXPECT_THROW(p.validate(), Error);
}

TEST(Centralities, RatioOfFrequencyAndCost) {
  auto net = DecompositionNetwork::build({primitive("A", 3), primitive("B", 2)});
  auto freq = FrequencyTable({{"A", 2}, {"other", 98}});
  auto table = centralities(net, freq, CostParams{});
  // Independent evaluation: f = 2/100, c = 1 + 0.1 * 3.
  EXPECT_NEAR(table[0].eta, 0.02 / 1.3, 1e-15);
  EXPECT_NEAR(table[0].eta, 0.015385, 1e-6);
  EXPECT_EQ(table[1].f, 0.0);
  EXPECT_EQ(table[1].eta, 0.0);
}

TEST(Centralities, KnownItemsRankFirst) {
  auto net = DecompositionNetwork::build(
      {primitive("A", 3), primitive("B", 0), primitive("K", 9), primitive("Z", 9)});
  auto freq = FrequencyTable({{"A", 60}, {"B", 30}, {"K", 1}, {"Z", 9}});
  CostParams p;
  p.known = {"K", "Z"};
  auto table = centralities(net, freq, p);
  EXPECT_TRUE(std::isinf(table[net.index_of("K")].eta));
  std::vector<NodeIndex> all = testing::all_nodes(net);
  std::sort(all.begin(), all.end(), [&](auto a, auto b) { return table.ranks_before(a, b); });
  std::vector<std::string> ids;
  for (auto i : all) ids.push_back(net.id(i).str());
  // Known by f descending, then unknown by eta.
  EXPECT_EQ(ids, (std::vector<std::string>{"Z", "K", "A", "B"}));
}

TEST(Centralities, KnownWithZeroFrequency) {
  auto net = DecompositionNetwork::build({primitive("A", 3), primitive("K", 3)});
  auto freq = FrequencyTable({{"A", 1}});
  CostParams p;
  p.known = {"K"};
  auto table = centralities(net, freq, p);
  EXPECT_EQ(table[1].eta, 0.0);
  EXPECT_TRUE(table.ranks_before(1, 0));
}

TEST(Centralities, TiesBrokenByFrequencyThenId) {
  std::vector<GlyphId> ids{"b", "a", "c"};
  CentralityTable t(ids, {0.2, 0.1, 0.1}, {2.0, 1.0, 1.0});
  // All eta = 0.1.
  EXPECT_TRUE(t.ranks_before(0, 1));  // higher f
  EXPECT_TRUE(t.ranks_before(1, 2));  // same f, id a < c
}

TEST(Centralities, RankingInvariantUnderFrequencyScaling) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = testing::random_instance(rng);
    const auto n = inst.net.size();
    std::vector<GlyphId> ids;
    std::vector<double> f, f_scaled, c;
    for (NodeIndex i = 0; i < n; ++i) {
      ids.push_back(inst.net.id(i));
      f.push_back(inst.table[i].f);
      f_scaled.push_back(inst.table[i].f * 37.5);
      c.push_back(inst.table[i].c);
    }
    CentralityTable a(ids, f, c), b(ids, f_scaled, c);
    auto order = [&](const CentralityTable& t) {
      auto all = testing::all_nodes(inst.net);
      std::sort(all.begin(), all.end(), [&](auto x, auto y) { return t.ranks_before(x, y); });
      return all;
    };
    ASSERT_EQ(order(a), order(b));
  }
}

TEST(Centralities, EveryNodeHasPositiveCostUnlessKnown) {
  auto nodes = parse_decompositions(
      "口\tp\t-\t3\n日\tp\t-\t0\n召\tc\t口 日\t5\n灬\tv\t口\t4\n");
  auto net = DecompositionNetwork::build(nodes);
  CostParams p;
  p.known = {"日"};
  auto table = centralities(net, FrequencyTable({{"口", 1}}), p);
  for (NodeIndex i = 0; i < net.size(); ++i) {
    if (p.known.count(net.id(i)))
      EXPECT_EQ(table[i].c, 0.0);
    else
      EXPECT_GT(table[i].c, 0.0);
    EXPECT_GE(table[i].eta, 0.0);
  }
}

TEST(Centralities, HierarchalTotalCostIsASetFunction) {
  // Two hierarchal orders of 照's decomposition.
  auto net = DecompositionNetwork::build(testing::zhao_nodes());
  auto freq = FrequencyTable({{"照", 5}, {"日", 9}, {"口", 4}});
  auto table = centralities(net, freq, CostParams{});
  auto a = external_order(net, table,
                          std::vector<GlyphId>{"日", "刀", "口", "召", "昭", "火", "灬", "照"});
  auto b = external_order(net, table,
                          std::vector<GlyphId>{"火", "灬", "口", "刀", "召", "日", "昭", "照"});
  EXPECT_DOUBLE_EQ(total_cost(net, table, a, CostMode::Hierarchal),
                   total_cost(net, table, b, CostMode::Hierarchal));
}

}  // namespace
}  // namespace hanzi_order
