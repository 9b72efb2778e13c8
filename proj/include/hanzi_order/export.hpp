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

#include <ostream>
#include <string>

#include "json.hpp"

#include "hanzi_order/costmodel.hpp"
#include "hanzi_order/format.hpp"
#include "hanzi_order/metrics.hpp"
#include "hanzi_order/network.hpp"
#include "hanzi_order/ordering.hpp"

namespace hanzi_order {

inline void write_order_csv(std::ostream& os, const DecompositionNetwork& net,
                            const CentralityTable& table, const LearningOrder& order) {
  os << "rank,glyph,kind,cost,freq,eta,cum_cost,cum_freq\n";
  double cum_cost = 0.0, cum_freq = 0.0;
  std::size_t rank = 0;
  for (const auto& item : order.items) {
    cum_cost += item.cost;
    cum_freq += item.freq;
    os << ++rank << ',' << item.id.str() << ',' << kind_code(net.node(item.node).kind)
       << ',' << fixed(item.cost, 6) << ',' << fixed(item.freq, 9) << ','
       << fixed(table[item.node].eta, 9) << ',' << fixed(cum_cost, 6) << ','
       << fixed(cum_freq, 9) << '\n';
  }
}

inline void write_curve_csv(std::ostream& os, const LearningCurve& curve) {
  os << "cum_cost,cum_freq\n";
  for (const auto& p : curve.points)
    os << fixed(p.cum_cost, 6) << ',' << fixed(p.cum_freq, 9) << '\n';
}

inline nlohmann::ordered_json curve_summary(const LearningCurve& curve) {
  nlohmann::ordered_json j;
  j["c0"] = curve.c0;
  j["lambda_f"] = curve.lambda_f;
  j["lambda_avg"] = curve.lambda_avg;
  j["n_learned"] = curve.n_learned;
  return j;
}

// Only reported rows are written; absent averages are left empty.
inline void write_cluster_csv(std::ostream& os, const ClusterStats& stats) {
  os << "n,avg_d1,avg_d2\n";
  for (const auto& row : stats.rows) {
    if (!row.reported) continue;
    os << row.n << ',' << (row.avg_d1 ? fixed(*row.avg_d1, 6) : "") << ','
       << (row.avg_d2 ? fixed(*row.avg_d2, 6) : "") << '\n';
  }
}

}  // namespace hanzi_order
