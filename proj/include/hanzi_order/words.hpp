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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hanzi_order/costmodel.hpp"
#include "hanzi_order/ingest.hpp"
#include "hanzi_order/metrics.hpp"
#include "hanzi_order/network.hpp"
#include "hanzi_order/ordering.hpp"

namespace hanzi_order {

struct WordNetworkConfig {
  std::size_t top_k = 10000;  // most frequent multi-character words kept
  std::optional<TargetList> target;
};

struct DroppedWord {
  GlyphId word;
  std::string reason;
};

struct WordNetwork {
  DecompositionNetwork network;
  // Word-level frequencies for every node: characters carry their
  // frequency as standalone single-character words, or 0.
  FrequencyTable freq;
  std::vector<GlyphId> added;
  std::vector<DroppedWord> dropped;
};

// Adds one Word node per retained multi-character word, with its characters
// as components in reading order. Words that cannot be built from the base
// network are dropped and reported.
inline WordNetwork expand_with_words(const DecompositionNetwork& net,
                                     const FrequencyTable& word_freq,
                                     const WordNetworkConfig& cfg) {
  if (cfg.top_k < 1) throw Error("top_k must be at least 1");

  struct Candidate {
    GlyphId word;
    std::uint64_t count;
    std::vector<std::string> chars;
  };
  std::vector<Candidate> candidates;
  for (const auto& [word, count] : word_freq.counts()) {
    auto chars = utf8_chars(word.str());
    if (chars.size() >= 2) candidates.push_back({word, count, std::move(chars)});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.word < b.word;
            });
  if (candidates.size() > cfg.top_k) candidates.resize(cfg.top_k);

  WordNetwork out;
  auto nodes = net.nodes();
  for (auto& cand : candidates) {
    if (net.contains(cand.word)) {
      out.dropped.push_back({cand.word, "already a network node"});
      continue;
    }
    std::optional<std::string> missing;
    for (const auto& ch : cand.chars) {
      auto idx = net.find(GlyphId(ch));
      if (!idx || net.node(*idx).kind == GlyphKind::Word) {
        missing = ch;
        break;
      }
    }
    if (missing) {
      out.dropped.push_back({cand.word, "character " + *missing + " not in network"});
      continue;
    }
    GlyphNode node;
    node.id = cand.word;
    node.kind = GlyphKind::Word;
    for (auto& ch : cand.chars) node.components.emplace_back(std::move(ch));
    out.added.push_back(node.id);
    nodes.push_back(std::move(node));
  }
  out.network = DecompositionNetwork::build(std::move(nodes), net.options());
  out.freq = word_freq;
  return out;
}

struct TargetCurve {
  LearningOrder order;
  LearningCurve curve;
  std::vector<GlyphId> missing;  // target items absent from the network
};

// Learning curve restricted to a target vocabulary. Frequencies stay
// normalized against the full word table, so the curve plateaus at the
// target's share of usage rather than at 1.
inline TargetCurve target_subset_curve(const WordNetwork& words,
                                       const TargetList& target, double c0,
                                       const CostParams& params = {}) {
  if (!(c0 > 0.0)) throw NonPositiveHorizon(c0);
  TargetCurve out;
  std::vector<NodeIndex> select;
  for (const auto& item : target.items) {
    if (auto idx = words.network.find(item))
      select.push_back(*idx);
    else
      out.missing.push_back(item);
  }
  auto table = centralities(words.network, words.freq, params);
  out.order = priority_topo_sort(words.network, table, std::span<const NodeIndex>(select));
  out.curve = curve(words.network, table, out.order, c0, CostMode::Hierarchal);
  return out;
}

}  // namespace hanzi_order
