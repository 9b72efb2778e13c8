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
#include <span>
#include <string>
#include <vector>

#include "hanzi_order/costmodel.hpp"
#include "hanzi_order/errors.hpp"
#include "hanzi_order/glyph.hpp"
#include "hanzi_order/network.hpp"

namespace hanzi_order {

enum class Provenance { Optimized, PureFrequency, External, BruteForceOptimal };

inline std::string_view provenance_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::Optimized: return "optimized";
    case Provenance::PureFrequency: return "pure-frequency";
    case Provenance::External: return "external";
    case Provenance::BruteForceOptimal: return "brute-force-optimal";
  }
  return "?";
}

struct OrderItem {
  GlyphId id;
  NodeIndex node = 0;
  double cost = 0.0;
  double freq = 0.0;
};

struct LearningOrder {
  std::vector<OrderItem> items;
  Provenance provenance = Provenance::External;

  std::size_t size() const noexcept { return items.size(); }
  bool empty() const noexcept { return items.empty(); }

  std::vector<NodeIndex> nodes() const {
    std::vector<NodeIndex> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back(item.node);
    return out;
  }

  std::vector<GlyphId> ids() const {
    std::vector<GlyphId> out;
    out.reserve(items.size());
    for (const auto& item : items) out.push_back(item.id);
    return out;
  }
};

inline LearningOrder make_order(const DecompositionNetwork& net,
                                const CentralityTable& table,
                                std::span<const NodeIndex> nodes,
                                Provenance provenance) {
  LearningOrder order;
  order.provenance = provenance;
  order.items.reserve(nodes.size());
  for (NodeIndex n : nodes)
    order.items.push_back({net.id(n), n, table[n].c, table[n].f});
  return order;
}

inline std::vector<NodeIndex> resolve(const DecompositionNetwork& net,
                                      std::span<const GlyphId> ids) {
  std::vector<NodeIndex> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(net.index_of(id));
  return out;
}

// `select` plus every closure member, each once, ascending by index.
inline std::vector<NodeIndex> with_closures(const DecompositionNetwork& net,
                                            std::span<const NodeIndex> select) {
  std::vector<char> in(net.size(), 0);
  for (NodeIndex s : select) {
    in.at(s) = 1;
    for (NodeIndex c : net.closure(s)) in[c] = 1;
  }
  std::vector<NodeIndex> out;
  for (NodeIndex i = 0; i < net.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

inline std::vector<NodeIndex> centrality_sorted(const CentralityTable& table,
                                                std::vector<NodeIndex> nodes) {
  std::sort(nodes.begin(), nodes.end(), [&](NodeIndex a, NodeIndex b) {
    return table.ranks_before(a, b);
  });
  return nodes;
}

// Imposes hierarchal order on a centrality-ranked list while disturbing it
// as little as possible.
//
// A cursor sweeps from the right end (lowest centrality) to the left. For
// the item under the cursor, each closure member is checked in closure
// order; a member lying to its right is pulled out and re-inserted left of
// it, just right of the last item (left of the current one) whose
// centrality is at least the member's own. After an item is handled the
// cursor moves to the slot immediately left of that item's new position,
// so members that were moved are themselves visited later.
//
// `list` must contain the closure of each of its members. When `moved` is
// given it receives every node that was repositioned, in move order.
inline std::vector<NodeIndex> repair_topological(const DecompositionNetwork& net,
                                                 const CentralityTable& table,
                                                 std::vector<NodeIndex> list,
                                                 std::vector<NodeIndex>* moved = nullptr) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(net.size(), kAbsent);
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (pos.at(list[k]) != kAbsent)
      throw Error("duplicate node in ordering input: " + net.id(list[k]).str());
    pos[list[k]] = k;
  }
  for (NodeIndex n : list)
    for (NodeIndex c : net.closure(n))
      if (pos[c] == kAbsent)
        throw Error("ordering input lacks " + net.id(c).str() +
                    ", a component of " + net.id(n).str());

  std::ptrdiff_t cursor = static_cast<std::ptrdiff_t>(list.size()) - 1;
  while (cursor >= 0) {
    const NodeIndex current = list[static_cast<std::size_t>(cursor)];
    for (NodeIndex member : net.closure(current)) {
      const std::size_t from = pos[member];
      const std::size_t here = pos[current];
      if (from < here) continue;
      std::size_t to = here;
      while (to > 0 && table.compare_priority(list[to - 1], member) < 0) --to;
      std::rotate(list.begin() + static_cast<std::ptrdiff_t>(to),
                  list.begin() + static_cast<std::ptrdiff_t>(from),
                  list.begin() + static_cast<std::ptrdiff_t>(from) + 1);
      for (std::size_t k = to; k <= from; ++k) pos[list[k]] = k;
      if (moved) moved->push_back(member);
    }
    cursor = static_cast<std::ptrdiff_t>(pos[current]) - 1;
  }
  return list;
}

inline LearningOrder priority_topo_sort(const DecompositionNetwork& net,
                                        const CentralityTable& table,
                                        std::span<const NodeIndex> select) {
  auto list = centrality_sorted(table, with_closures(net, select));
  auto sorted = repair_topological(net, table, std::move(list));
  return make_order(net, table, sorted, Provenance::Optimized);
}

// Throws UnknownId when `select` names a node outside the network.
inline LearningOrder priority_topo_sort(const DecompositionNetwork& net,
                                        const CentralityTable& table,
                                        std::span<const GlyphId> select) {
  auto nodes = resolve(net, select);
  return priority_topo_sort(net, table, std::span<const NodeIndex>(nodes));
}

// Baseline: frequency descending, ties by glyph id. Not hierarchal in
// general; zero-frequency closure members end up last.
inline LearningOrder pure_frequency_order(const DecompositionNetwork& net,
                                          const CentralityTable& table,
                                          std::span<const NodeIndex> select) {
  auto nodes = with_closures(net, select);
  std::sort(nodes.begin(), nodes.end(), [&](NodeIndex a, NodeIndex b) {
    if (table[a].f != table[b].f) return table[a].f > table[b].f;
    return net.id(a) < net.id(b);
  });
  return make_order(net, table, nodes, Provenance::PureFrequency);
}

inline LearningOrder pure_frequency_order(const DecompositionNetwork& net,
                                          const CentralityTable& table,
                                          std::span<const GlyphId> select) {
  auto nodes = resolve(net, select);
  return pure_frequency_order(net, table, std::span<const NodeIndex>(nodes));
}

// Wraps a fixed order read from a file. Throws UnknownId.
inline LearningOrder external_order(const DecompositionNetwork& net,
                                    const CentralityTable& table,
                                    std::span<const GlyphId> ids) {
  auto nodes = resolve(net, ids);
  return make_order(net, table, nodes, Provenance::External);
}

struct Violation {
  GlyphId compound;
  GlyphId component;
  bool missing = false;  // component absent from the order entirely

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Every (item, closure member) pair where the member comes later or is
// missing. Empty iff the order is hierarchal.
inline std::vector<Violation> validate_topological(const DecompositionNetwork& net,
                                                   const LearningOrder& order) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(net.size(), kAbsent);
  for (std::size_t k = 0; k < order.items.size(); ++k) pos.at(order.items[k].node) = k;
  std::vector<Violation> out;
  for (std::size_t k = 0; k < order.items.size(); ++k) {
    const auto& item = order.items[k];
    for (NodeIndex c : net.closure(item.node)) {
      if (pos[c] == kAbsent)
        out.push_back({item.id, net.id(c), true});
      else if (pos[c] > k)
        out.push_back({item.id, net.id(c), false});
    }
  }
  return out;
}

inline bool is_topological(const DecompositionNetwork& net,
                           std::span<const NodeIndex> order) {
  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pos(net.size(), kAbsent);
  for (std::size_t k = 0; k < order.size(); ++k) pos.at(order[k]) = k;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (NodeIndex c : net.closure(order[k]))
      if (pos[c] == kAbsent || pos[c] > k) return false;
  return true;
}

namespace detail {

// Exhaustive search state for brute_force_best_order.
class OrderEnumerator {
 public:
  OrderEnumerator(const DecompositionNetwork& net, const CentralityTable& table,
                  std::vector<NodeIndex> nodes, double c0)
      : table_(table), nodes_(std::move(nodes)), c0_(c0) {
    std::sort(nodes_.begin(), nodes_.end(), [&](NodeIndex a, NodeIndex b) {
      return net.id(a) < net.id(b);
    });
    const auto n = nodes_.size();
    std::vector<int> local(net.size(), -1);
    for (std::size_t k = 0; k < n; ++k) local[nodes_[k]] = static_cast<int>(k);
    needs_.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k)
      for (NodeIndex c : net.closure(nodes_[k]))
        needs_[k] |= std::uint32_t{1} << local[c];
    prefix_.reserve(n);
  }

  std::vector<NodeIndex> run() {
    extend(0, 0.0, 0.0, 0.0, false);
    std::vector<NodeIndex> out;
    for (int k : best_) out.push_back(nodes_[static_cast<std::size_t>(k)]);
    return out;
  }

 private:
  static constexpr double kTie = 1e-12;

  void extend(std::uint32_t used, double cum_cost, double cum_freq, double area,
              bool stopped) {
    const auto n = nodes_.size();
    if (prefix_.size() == n) {
      const double total = stopped ? area : area + cum_freq * (c0_ - cum_cost);
      const double avg = total / c0_;
      const bool better =
          !found_ || avg > best_avg_ + kTie ||
          (avg >= best_avg_ - kTie && cum_freq > best_final_ + kTie);
      if (better) {
        found_ = true;
        best_avg_ = avg;
        best_final_ = cum_freq;
        best_ = prefix_;
      }
      return;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint32_t bit = std::uint32_t{1} << k;
      if ((used & bit) || (needs_[k] & ~used)) continue;
      const auto& e = table_[nodes_[k]];
      prefix_.push_back(static_cast<int>(k));
      if (stopped || cum_cost + e.c > c0_) {
        // Past the horizon: the rest of the curve is frozen.
        const double closed =
            stopped ? area : area + cum_freq * (c0_ - cum_cost);
        extend(used | bit, cum_cost, cum_freq, closed, true);
      } else {
        extend(used | bit, cum_cost + e.c, cum_freq + e.f, area + cum_freq * e.c,
               false);
      }
      prefix_.pop_back();
    }
  }

  const CentralityTable& table_;
  std::vector<NodeIndex> nodes_;
  double c0_;
  std::vector<std::uint32_t> needs_;
  std::vector<int> prefix_;
  std::vector<int> best_;
  bool found_ = false;
  double best_avg_ = 0.0;
  double best_final_ = 0.0;
};

}  // namespace detail

// Exact optimum over all hierarchal orders of `select` and its closures:
// highest integral efficiency at `c0`, then highest final efficiency, then
// lexicographically smallest id sequence. Exponential time; throws
// TooLarge above `limit` nodes.
inline LearningOrder brute_force_best_order(const DecompositionNetwork& net,
                                            const CentralityTable& table,
                                            std::span<const NodeIndex> select,
                                            double c0, std::size_t limit = 10) {
  if (!(c0 > 0.0)) throw NonPositiveHorizon(c0);
  auto nodes = with_closures(net, select);
  if (nodes.size() > limit || nodes.size() > 31) throw TooLarge(nodes.size(), limit);
  detail::OrderEnumerator search(net, table, std::move(nodes), c0);
  auto best = search.run();
  return make_order(net, table, best, Provenance::BruteForceOptimal);
}

inline LearningOrder brute_force_best_order(const DecompositionNetwork& net,
                                            const CentralityTable& table,
                                            std::span<const GlyphId> select,
                                            double c0, std::size_t limit = 10) {
  auto nodes = resolve(net, select);
  return brute_force_best_order(net, table, std::span<const NodeIndex>(nodes), c0,
                                limit);
}

}  // namespace hanzi_order
