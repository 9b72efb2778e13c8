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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hanzi_order/costmodel.hpp"
#include "hanzi_order/errors.hpp"
#include "hanzi_order/format.hpp"
#include "hanzi_order/network.hpp"
#include "hanzi_order/ordering.hpp"

namespace hanzi_order {

enum class CostMode {
  Hierarchal,                 // components assumed known; order must be hierarchal
  ChargeUnlearnedComponents,  // closure members not yet learned are paid on first use
};

struct Step {
  double cost = 0.0;
  double freq = 0.0;
};

struct CurvePoint {
  double cum_cost = 0.0;
  double cum_freq = 0.0;
};

// Step function F(C) of cumulative frequency against cumulative cost.
// F jumps at the right edge of each item's cost interval: an item's
// frequency counts only once its full cost is paid.
struct LearningCurve {
  std::vector<CurvePoint> points;  // strictly increasing cum_cost
  double c0 = 0.0;
  double lambda_f = 0.0;    // F(c0)
  double lambda_avg = 0.0;  // mean of F over [0, c0]
  std::size_t n_learned = 0;

  double at(double cum_cost) const {
    double f = 0.0;
    for (const auto& p : points) {
      if (p.cum_cost > cum_cost) break;
      f = p.cum_freq;
    }
    return f;
  }
};

// Items are taken while the running cost stays within c0; the first item
// that would overshoot and everything after it are dropped.
inline LearningCurve curve_from_steps(std::span<const Step> steps, double c0) {
  if (!(c0 > 0.0)) throw NonPositiveHorizon(c0);
  LearningCurve out;
  out.c0 = c0;
  double cum_cost = 0.0, cum_freq = 0.0, area = 0.0;
  for (const auto& step : steps) {
    if (cum_cost + step.cost > c0) break;
    area += cum_freq * step.cost;
    cum_cost += step.cost;
    cum_freq += step.freq;
    ++out.n_learned;
    if (!out.points.empty() && out.points.back().cum_cost == cum_cost)
      out.points.back().cum_freq = cum_freq;
    else
      out.points.push_back({cum_cost, cum_freq});
  }
  area += cum_freq * (c0 - cum_cost);
  out.lambda_f = cum_freq;
  out.lambda_avg = area / c0;
  return out;
}

// Per-item (cost, frequency) steps for `order` under `mode`.
//
// In charging mode an item pays its own cost plus the cost of every closure
// member that has not yet appeared at its own position. Those members are
// not marked learned and pay again when they come up.
inline std::vector<Step> learning_steps(const DecompositionNetwork& net,
                                        const CentralityTable& table,
                                        const LearningOrder& order, CostMode mode) {
  std::vector<Step> steps;
  steps.reserve(order.size());
  if (mode == CostMode::Hierarchal) {
    auto violations = validate_topological(net, order);
    if (!violations.empty()) throw NotTopological(violations.size());
    for (const auto& item : order.items) steps.push_back({item.cost, item.freq});
    return steps;
  }
  std::vector<char> learned(net.size(), 0);
  for (const auto& item : order.items) {
    double c = item.cost;
    for (NodeIndex m : net.closure(item.node))
      if (!learned[m]) c += table[m].c;
    learned.at(item.node) = 1;
    steps.push_back({c, item.freq});
  }
  return steps;
}

inline LearningCurve curve(const DecompositionNetwork& net,
                           const CentralityTable& table, const LearningOrder& order,
                           double c0, CostMode mode) {
  if (!(c0 > 0.0)) throw NonPositiveHorizon(c0);
  auto steps = learning_steps(net, table, order, mode);
  return curve_from_steps(steps, c0);
}

inline double total_cost(const DecompositionNetwork& net, const CentralityTable& table,
                         const LearningOrder& order, CostMode mode) {
  double sum = 0.0;
  for (const auto& s : learning_steps(net, table, order, mode)) sum += s.cost;
  return sum;
}

struct ClusterRow {
  std::size_t n = 0;              // prefix length
  std::optional<double> avg_d1;   // mean distance to closest preceding component
  std::optional<double> avg_d2;   // mean distance to closest sharer
  bool reported = false;          // n >= min_reported_n
};

struct ClusterStats {
  std::vector<ClusterRow> rows;
  std::size_t min_reported_n = 250;
};

// Clustering of related items along an order, in list positions.
//   d1(i): distance back to the nearest direct component placed before i;
//          undefined when none precedes.
//   d2(i): distance to the nearest other item in the prefix that shares a
//          component with i, either direction.
// Row n averages the defined values over the first n items. Rows below
// min_reported_n are computed but not flagged as reported.
inline ClusterStats cluster_stats(const DecompositionNetwork& net,
                                  const LearningOrder& order, std::size_t max_n,
                                  std::size_t min_reported_n = 250,
                                  ShareMode share = ShareMode::Direct) {
  ClusterStats stats;
  stats.min_reported_n = min_reported_n;
  const std::size_t len = std::min(max_n, order.size());

  constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> pos(net.size(), kAbsent);
  // positions of prefix items holding each feature, ascending
  std::vector<std::vector<std::size_t>> holders(net.size());
  std::vector<std::size_t> d2(len, kAbsent);
  double sum_d1 = 0.0, sum_d2 = 0.0;
  std::size_t count_d1 = 0, count_d2 = 0;

  for (std::size_t i = 0; i < len; ++i) {
    const NodeIndex node = order.items[i].node;
    pos.at(node) = i;

    std::size_t d1 = kAbsent;
    for (NodeIndex c : net.components(node))
      if (pos[c] != kAbsent && pos[c] < i) d1 = std::min(d1, i - pos[c]);
    if (d1 != kAbsent) {
      sum_d1 += static_cast<double>(d1);
      ++count_d1;
    }

    auto features = net.share_features(node, share);
    for (NodeIndex feature : features) {
      for (std::size_t j : holders[feature]) {
        const std::size_t dist = i - j;
        if (d2[j] == kAbsent) {
          d2[j] = dist;
          sum_d2 += static_cast<double>(dist);
          ++count_d2;
        } else if (dist < d2[j]) {
          sum_d2 -= static_cast<double>(d2[j] - dist);
          d2[j] = dist;
        }
        d2[i] = std::min(d2[i], dist);
      }
    }
    if (d2[i] != kAbsent) {
      sum_d2 += static_cast<double>(d2[i]);
      ++count_d2;
    }
    for (NodeIndex feature : features) holders[feature].push_back(i);

    ClusterRow row;
    row.n = i + 1;
    if (count_d1) row.avg_d1 = sum_d1 / static_cast<double>(count_d1);
    if (count_d2) row.avg_d2 = sum_d2 / static_cast<double>(count_d2);
    row.reported = row.n >= min_reported_n;
    stats.rows.push_back(row);
  }
  return stats;
}

struct ReportRow {
  std::string label;
  // One curve per horizon, aligned with the horizons passed to
  // table_report; nullopt when the order could not be evaluated.
  std::vector<std::optional<LearningCurve>> curves;
};

// Tab-separated N / final / integral efficiency table, one row per curve.
inline std::string table_report(std::span<const ReportRow> rows,
                                std::span<const double> horizons) {
  if (rows.empty()) return {};
  std::string out = "curve";
  for (double h : horizons) {
    const auto tag = "@" + shortest(h);
    out += "\tN" + tag + "\tlambda_f" + tag + "\tlambda_avg" + tag;
  }
  out += '\n';
  for (const auto& row : rows) {
    out += row.label;
    for (std::size_t k = 0; k < horizons.size(); ++k) {
      const auto* c = k < row.curves.size() && row.curves[k] ? &*row.curves[k] : nullptr;
      if (!c) {
        out += "\t-\t-\t-";
        continue;
      }
      out += '\t' + std::to_string(c->n_learned);
      out += '\t' + fixed(c->lambda_f, 3);
      out += '\t' + fixed(c->lambda_avg, 3);
    }
    out += '\n';
  }
  return out;
}

}  // namespace hanzi_order
