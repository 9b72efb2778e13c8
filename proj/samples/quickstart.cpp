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


// Library walkthrough: parse a small network, rank it, and score the order.

#include <iostream>

#include "hanzi_order/hanzi_order.hpp"

int main() {
  using namespace hanzi_order;

  auto net = DecompositionNetwork::build(parse_decompositions(
      "刀\tp\t-\t2\n"
      "口\tp\t-\t3\n"
      "日\tp\t-\t4\n"
      "火\tp\t-\t4\n"
      "灬\tv\t火\t4\n"
      "召\tc\t刀 口\t5\n"
      "昭\tc\t日 召\t9\n"
      "照\tc\t昭 灬\t13\n"));
  auto freq = parse_frequencies("日\t150\n口\t120\n照\t90\n火\t60\n刀\t30\n召\t10\n昭\t5\n");

  auto table = centralities(net, freq, CostParams{});
  std::vector<NodeIndex> all;
  for (NodeIndex i = 0; i < net.size(); ++i) all.push_back(i);
  auto order = priority_topo_sort(net, table, std::span<const NodeIndex>(all));

  write_order_csv(std::cout, net, table, order);
  auto c = curve(net, table, order, 6.0, CostMode::Hierarchal);
  std::cout << "C0=6 N=" << c.n_learned << " lambda_f=" << fixed(c.lambda_f, 3)
            << " lambda_avg=" << fixed(c.lambda_avg, 3) << '\n';
  return validate_topological(net, order).empty() ? 0 : 1;
}
