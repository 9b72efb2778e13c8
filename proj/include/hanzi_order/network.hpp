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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hanzi_order/errors.hpp"
#include "hanzi_order/glyph.hpp"

namespace hanzi_order {

using NodeIndex = std::uint32_t;

struct NetworkOptions {
  // Follow the single edge of a Variant node (灬 -> 火) when expanding
  // closures. When false a variant is treated as a leaf for ordering.
  bool traverse_variants = true;
};

// How "shares a component" is decided for sharers() and cluster statistics.
enum class ShareMode {
  Direct,   // intersect direct component lists
  Closure,  // intersect full decomposition closures
};

// Immutable decomposition DAG. Edges run from a component to every node
// that lists it. Closures are computed once at build time, so a built
// network can be shared across threads for reading.
class DecompositionNetwork {
 public:
  DecompositionNetwork() = default;

  // Validates and indexes `nodes`. Throws InvalidNode, DuplicateId,
  // DanglingReference or CycleDetected.
  static DecompositionNetwork build(std::vector<GlyphNode> nodes,
                                    NetworkOptions options = {}) {
    DecompositionNetwork net;
    net.options_ = options;
    net.nodes_ = std::move(nodes);
    const auto n = net.nodes_.size();
    net.index_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& node = net.nodes_[i];
      check_node_shape(node);
      if (!net.index_.emplace(node.id.str(), static_cast<NodeIndex>(i)).second)
        throw DuplicateId(node.id.str());
    }

    net.components_.resize(n);
    net.containers_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& node = net.nodes_[i];
      auto& comps = net.components_[i];
      comps.reserve(node.components.size());
      for (const auto& c : node.components) {
        auto it = net.index_.find(c.str());
        if (it == net.index_.end())
          throw DanglingReference(node.id.str(), c.str());
        if (node.kind == GlyphKind::Word &&
            net.nodes_[it->second].kind == GlyphKind::Word)
          throw InvalidNode("word " + node.id.str() + " contains word " +
                            c.str());
        comps.push_back(it->second);
      }
    }
    net.check_acyclic();

    for (std::size_t i = 0; i < n; ++i) {
      for (NodeIndex c : net.components_[i]) {
        auto& up = net.containers_[c];
        if (up.empty() || up.back() != i) up.push_back(static_cast<NodeIndex>(i));
      }
    }
    net.compute_closures();
    return net;
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  const NetworkOptions& options() const noexcept { return options_; }
  const std::vector<GlyphNode>& nodes() const noexcept { return nodes_; }
  const GlyphNode& node(NodeIndex i) const { return nodes_.at(i); }
  const GlyphId& id(NodeIndex i) const { return nodes_.at(i).id; }

  std::optional<NodeIndex> find(const GlyphId& id) const {
    auto it = index_.find(id.str());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  NodeIndex index_of(const GlyphId& id) const {
    auto it = index_.find(id.str());
    if (it == index_.end()) throw UnknownId(id.str());
    return it->second;
  }

  bool contains(const GlyphId& id) const { return index_.count(id.str()) != 0; }

  // Direct components, stored order, with multiplicity.
  std::span<const NodeIndex> components(NodeIndex i) const {
    return components_.at(i);
  }

  // Nodes listing `i` as a direct component (each once, ascending).
  std::span<const NodeIndex> containers(NodeIndex i) const {
    return containers_.at(i);
  }

  // Every node reachable through component edges, excluding `i`. Depth-first
  // preorder over the stored component order; duplicates dropped on first
  // visit.
  std::span<const NodeIndex> closure(NodeIndex i) const { return closure_.at(i); }

  std::vector<GlyphId> closure(const GlyphId& id) const {
    std::vector<GlyphId> out;
    for (NodeIndex c : closure(index_of(id))) out.push_back(nodes_[c].id);
    return out;
  }

  // Other nodes with at least one component in common with `i`, ascending.
  std::vector<NodeIndex> sharers(NodeIndex i,
                                 ShareMode mode = ShareMode::Direct) const {
    std::vector<NodeIndex> out;
    if (mode == ShareMode::Direct) {
      for (NodeIndex c : components_.at(i))
        for (NodeIndex other : containers_[c])
          if (other != i) out.push_back(other);
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    std::vector<char> mine(size(), 0);
    for (NodeIndex c : closure_.at(i)) mine[c] = 1;
    for (NodeIndex j = 0; j < size(); ++j) {
      if (j == i) continue;
      for (NodeIndex c : closure_[j]) {
        if (mine[c]) {
          out.push_back(j);
          break;
        }
      }
    }
    return out;
  }

  std::vector<GlyphId> sharers(const GlyphId& id,
                               ShareMode mode = ShareMode::Direct) const {
    std::vector<GlyphId> out;
    for (NodeIndex s : sharers(index_of(id), mode)) out.push_back(nodes_[s].id);
    return out;
  }

  // Distinct components used to decide sharing under `mode`, ascending.
  std::vector<NodeIndex> share_features(NodeIndex i, ShareMode mode) const {
    const auto& src = mode == ShareMode::Closure ? closure_.at(i) : components_.at(i);
    std::vector<NodeIndex> out(src.begin(), src.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  bool is_expandable(NodeIndex i) const {
    return options_.traverse_variants || nodes_[i].kind != GlyphKind::Variant;
  }

  void check_acyclic() const {
    enum : char { White, Grey, Black };
    std::vector<char> color(size(), White);
    std::vector<NodeIndex> path;
    struct Frame {
      NodeIndex node;
      std::size_t next;
    };
    std::vector<Frame> stack;
    for (NodeIndex root = 0; root < size(); ++root) {
      if (color[root] != White) continue;
      stack.push_back({root, 0});
      color[root] = Grey;
      while (!stack.empty()) {
        auto& top = stack.back();
        const auto& comps = components_[top.node];
        if (top.next == comps.size()) {
          color[top.node] = Black;
          stack.pop_back();
          continue;
        }
        NodeIndex c = comps[top.next++];
        if (color[c] == Grey) {
          std::vector<std::string> cycle;
          auto it = std::find_if(stack.begin(), stack.end(),
                                 [c](const Frame& f) { return f.node == c; });
          for (; it != stack.end(); ++it) cycle.push_back(nodes_[it->node].id.str());
          cycle.push_back(nodes_[c].id.str());
          throw CycleDetected(std::move(cycle));
        }
        if (color[c] == White) {
          color[c] = Grey;
          stack.push_back({c, 0});
        }
      }
    }
  }

  void compute_closures() {
    closure_.assign(size(), {});
    std::vector<NodeIndex> stamp(size(), 0);
    NodeIndex epoch = 0;
    std::vector<std::pair<NodeIndex, std::size_t>> stack;
    for (NodeIndex root = 0; root < size(); ++root) {
      ++epoch;
      auto& out = closure_[root];
      if (!is_expandable(root)) continue;
      stack.assign(1, {root, 0});
      while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& comps = components_[v];
        if (next == comps.size()) {
          stack.pop_back();
          continue;
        }
        NodeIndex c = comps[next++];
        if (stamp[c] == epoch) continue;
        stamp[c] = epoch;
        out.push_back(c);
        if (is_expandable(c)) stack.push_back({c, 0});
      }
    }
  }

  NetworkOptions options_;
  std::vector<GlyphNode> nodes_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::vector<std::vector<NodeIndex>> components_;
  std::vector<std::vector<NodeIndex>> containers_;
  std::vector<std::vector<NodeIndex>> closure_;
};

}  // namespace hanzi_order
