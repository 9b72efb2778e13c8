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

#include <cmath>
#include <compare>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hanzi_order/errors.hpp"
#include "hanzi_order/glyph.hpp"
#include "hanzi_order/ingest.hpp"
#include "hanzi_order/network.hpp"

namespace hanzi_order {

struct CostParams {
  double gamma = 0.1;          // per-stroke cost of a primitive
  double variant_cost = 1.0;   // flat cost of a variant form
  std::set<GlyphId> known;     // already learned: cost 0
  std::map<GlyphId, double> suppression;  // partially known: cost scale in [0, 1]

  void validate() const {
    if (!(gamma >= 0.0)) throw Error("gamma must be non-negative");
    if (!(variant_cost > 0.0)) throw Error("variant cost must be positive");
    for (const auto& [id, factor] : suppression)
      if (!(factor >= 0.0 && factor <= 1.0))
        throw Error("suppression factor for " + id.str() + " outside [0, 1]");
  }
};

// Learning cost of one node, assuming its components are already known.
//   primitive: 1 + gamma * strokes
//   compound:  number of combinations, i.e. component count - 1
//   variant:   flat variant_cost
//   word:      character count - 1
inline double cost(const GlyphNode& node, const CostParams& params) {
  if (params.known.count(node.id)) return 0.0;
  double c = 0.0;
  switch (node.kind) {
    case GlyphKind::PrimitiveCharacter:
    case GlyphKind::PrimitiveComponent:
      // fused so 1 + 0.1 * 7 rounds once, to 1.7
      c = std::fma(params.gamma, static_cast<double>(node.strokes), 1.0);
      break;
    case GlyphKind::Compound:
    case GlyphKind::Word:
      c = static_cast<double>(node.components.size()) - 1.0;
      break;
    case GlyphKind::Variant:
      c = params.variant_cost;
      break;
  }
  if (auto it = params.suppression.find(node.id); it != params.suppression.end())
    c *= it->second;
  return c;
}

struct Centrality {
  double f = 0.0;    // frequency share
  double c = 0.0;    // learning cost
  double eta = 0.0;  // f / c; +inf for free items with f > 0
};

// Per-node frequency, cost and centrality, indexed like the network it was
// built from. Also defines the ranking used to seed the ordering:
//   1. free items (c == 0) before everything else, by f descending;
//   2. then eta descending;
//   3. ties by f descending, then glyph id.
class CentralityTable {
 public:
  CentralityTable() = default;

  // Builds a table from raw values; eta is derived. `ids` gives the
  // lexicographic tie-break and must be aligned with `f` and `c`.
  CentralityTable(std::vector<GlyphId> ids, std::vector<double> f,
                  std::vector<double> c)
      : ids_(std::move(ids)) {
    if (f.size() != ids_.size() || c.size() != ids_.size())
      throw Error("centrality table columns have different lengths");
    entries_.resize(ids_.size());
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      if (!(f[i] >= 0.0) || !(c[i] >= 0.0))
        throw Error("negative frequency or cost for " + ids_[i].str());
      entries_[i] = {f[i], c[i], ratio(f[i], c[i])};
    }
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const Centrality& operator[](NodeIndex i) const { return entries_.at(i); }
  const GlyphId& id(NodeIndex i) const { return ids_.at(i); }

  bool is_free(NodeIndex i) const { return entries_.at(i).c == 0.0; }

  // Compares centrality only: free items sit above all others and are
  // compared by f among themselves.
  std::partial_ordering compare_priority(NodeIndex a, NodeIndex b) const {
    const auto& ea = entries_[a];
    const auto& eb = entries_[b];
    const bool fa = ea.c == 0.0, fb = eb.c == 0.0;
    if (fa != fb) return fa ? std::partial_ordering::greater
                            : std::partial_ordering::less;
    return fa ? ea.f <=> eb.f : ea.eta <=> eb.eta;
  }

  // Strict total order: true when `a` ranks ahead of `b`.
  bool ranks_before(NodeIndex a, NodeIndex b) const {
    auto cmp = compare_priority(a, b);
    if (cmp != 0) return cmp > 0;
    if (entries_[a].f != entries_[b].f) return entries_[a].f > entries_[b].f;
    return ids_[a] < ids_[b];
  }

  static double ratio(double f, double c) {
    if (c > 0.0) return f / c;
    return f > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }

 private:
  std::vector<GlyphId> ids_;
  std::vector<Centrality> entries_;
};

// Every network node gets an entry; nodes missing from `freq` get f = 0.
inline CentralityTable centralities(const DecompositionNetwork& net,
                                    const FrequencyTable& freq,
                                    const CostParams& params) {
  params.validate();
  std::vector<GlyphId> ids;
  std::vector<double> f, c;
  ids.reserve(net.size());
  f.reserve(net.size());
  c.reserve(net.size());
  for (const auto& node : net.nodes()) {
    ids.push_back(node.id);
    f.push_back(freq.frequency(node.id));
    c.push_back(cost(node, params));
  }
  return CentralityTable(std::move(ids), std::move(f), std::move(c));
}

}  // namespace hanzi_order
