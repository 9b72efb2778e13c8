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

#pragma once

// Shared fixtures and random generators for the test suites.

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hanzi_order/hanzi_order.hpp"

namespace hanzi_order::testing {

inline GlyphNode primitive(const std::string& id, int strokes = 0,
                           GlyphKind kind = GlyphKind::PrimitiveCharacter) {
  return GlyphNode{id, kind, {}, strokes};
}

inline GlyphNode compound(const std::string& id, std::vector<GlyphId> comps,
                          int strokes = 0) {
  return GlyphNode{id, GlyphKind::Compound, std::move(comps), strokes};
}

inline GlyphNode variant(const std::string& id, const std::string& of, int strokes = 0) {
  return GlyphNode{id, GlyphKind::Variant, {of}, strokes};
}

// 照 and its decomposition: 照 = 昭 + 灬, 昭 = 日 + 召, 召 = 刀 + 口,
// 灬 a variant of 火.
inline std::vector<GlyphNode> zhao_nodes() {
  return {
      compound("照", {"昭", "灬"}, 13),
      compound("昭", {"日", "召"}, 9),
      compound("召", {"刀", "口"}, 5),
      primitive("日", 4),
      primitive("刀", 2),
      primitive("口", 3),
      variant("灬", "火", 4),
      primitive("火", 4),
  };
}

inline std::vector<GlyphNode> de_nodes() {
  return {compound("的", {"白", "勺"}, 8), primitive("白", 5), primitive("勺", 3)};
}

// Table with explicit frequencies and costs, aligned with `net`.
inline CentralityTable table_from(const DecompositionNetwork& net,
                                  const std::vector<double>& f,
                                  const std::vector<double>& c) {
  std::vector<GlyphId> ids;
  for (const auto& n : net.nodes()) ids.push_back(n.id);
  return CentralityTable(std::move(ids), f, c);
}

struct RandomInstance {
  DecompositionNetwork net;
  CentralityTable table;
};

struct RandomDagOptions {
  std::size_t min_nodes = 1;
  std::size_t max_nodes = 30;
  double edge_probability = 0.25;
  double variant_share = 0.1;
  double zero_freq_share = 0.15;
  bool distinct_etas = true;
};

// Random decomposition DAG with random frequencies and costs. Node ids are
// n00, n01, ... and the node list is shuffled before building so index
// order carries no topological information.
inline RandomInstance random_instance(std::mt19937_64& rng,
                                      const RandomDagOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> size_dist(opt.min_nodes, opt.max_nodes);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = size_dist(rng);

  auto name = [](std::size_t i) {
    std::string s = std::to_string(i);
    return "n" + std::string(s.size() < 2 ? 2 - s.size() : 0, '0') + s;
  };

  std::vector<GlyphNode> nodes;
  for (std::size_t i = 0; i < n; ++i) {
    GlyphNode node;
    node.id = name(i);
    node.strokes = static_cast<int>(unit(rng) * 12);
    std::vector<GlyphId> comps;
    for (std::size_t j = 0; j < i; ++j)
      if (unit(rng) < opt.edge_probability) comps.push_back(name(j));
    std::shuffle(comps.begin(), comps.end(), rng);
    if (comps.empty()) {
      node.kind = GlyphKind::PrimitiveCharacter;
    } else if (comps.size() == 1 && unit(rng) < opt.variant_share) {
      node.kind = GlyphKind::Variant;
    } else {
      if (comps.size() == 1) comps.push_back(name(static_cast<std::size_t>(unit(rng) * i)));
      node.kind = GlyphKind::Compound;
    }
    node.components = std::move(comps);
    nodes.push_back(std::move(node));
  }
  std::shuffle(nodes.begin(), nodes.end(), rng);
  auto net = DecompositionNetwork::build(std::move(nodes));

  std::vector<double> f(n), c(n);
  for (std::size_t i = 0; i < n; ++i) {
    f[i] = unit(rng) < opt.zero_freq_share ? 0.0 : unit(rng);
    c[i] = 0.5 + 2.0 * unit(rng);
    if (!opt.distinct_etas && unit(rng) < 0.3) {
      // Snap to a coarse grid so equal centralities occur.
      f[i] = std::round(f[i] * 4.0) / 4.0;
      c[i] = 1.0;
    }
  }
  auto table = table_from(net, f, c);
  return {std::move(net), std::move(table)};
}

// Random instance whose costs come from the cost model and whose
// frequencies are random counts.
inline RandomInstance random_model_instance(std::mt19937_64& rng, std::size_t max_nodes) {
  RandomDagOptions opt;
  opt.max_nodes = max_nodes;
  opt.min_nodes = 2;
  opt.edge_probability = 0.35;
  auto inst = random_instance(rng, opt);
  std::uniform_int_distribution<int> count(0, 100);
  std::map<GlyphId, std::uint64_t> counts;
  for (const auto& node : inst.net.nodes()) {
    const int k = count(rng);
    if (k > 10) counts[node.id] = static_cast<std::uint64_t>(k);
  }
  counts["<unlisted>"] = 50;  // corpus mass outside the network
  FrequencyTable freq(std::move(counts));
  inst.table = centralities(inst.net, freq, CostParams{});
  return inst;
}

// Six-node network, drawn by the calibration search, on which the greedy
// order scores 0.3053966437833715 at c0 = 7.2 against an exhaustive best of
// 0.33040935672514615. The greedy order opens with n00, an expensive rare
// primitive pulled forward by its containers n02 and n01.
struct Witness {
  DecompositionNetwork net;
  CentralityTable table;
  double c0;
};

inline Witness suboptimal_witness() {
  auto net = DecompositionNetwork::build({
      compound("n05", {"n03", "n03"}),
      primitive("n03", 3),
      primitive("n00", 9),
      compound("n04", {"n02", "n00"}),
      compound("n01", {"n00", "n00"}),
      compound("n02", {"n00", "n00"}),
  });
  std::vector<double> f(net.size()), c(net.size());
  const std::map<std::string, std::pair<double, double>> values = {
      {"n05", {0.16704805491990846, 1.0}}, {"n03", {0.13958810068649885, 1.3}},
      {"n00", {0.038901601830663615, 1.9000000000000001}},
      {"n04", {0.13729977116704806, 1.0}}, {"n01", {0.18535469107551489, 1.0}},
      {"n02", {0.21739130434782608, 1.0}},
  };
  for (NodeIndex i = 0; i < net.size(); ++i) {
    const auto& [fi, ci] = values.at(net.id(i).str());
    f[i] = fi;
    c[i] = ci;
  }
  auto table = table_from(net, f, c);
  return {std::move(net), std::move(table), 7.2000000000000002};
}

// Calibration instances: random_model_instance(rng, 8) over every node with
// the horizon at the total cost, seed kCalibrationSeed.
inline constexpr std::uint64_t kCalibrationSeed = 20260415;

inline double instance_total_cost(const RandomInstance& inst) {
  double sum = 0.0;
  for (NodeIndex i = 0; i < inst.net.size(); ++i) sum += inst.table[i].c;
  return sum;
}

inline std::vector<NodeIndex> all_nodes(const DecompositionNetwork& net) {
  std::vector<NodeIndex> out(net.size());
  for (NodeIndex i = 0; i < net.size(); ++i) out[i] = i;
  return out;
}

}  // namespace hanzi_order::testing
