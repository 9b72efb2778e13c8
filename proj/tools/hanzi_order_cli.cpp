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

// Command-line front end for building and scoring learning orders.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hanzi_order/pipeline.hpp"

namespace po = hanzi_order::pipeline;

namespace {

void add_inputs(CLI::App* cmd, po::RunConfig& cfg) {
  cmd->add_option("--decomp", cfg.decompositions, "Decomposition file");
  cmd->add_option("--freq", cfg.frequencies, "Character frequency file");
  cmd->add_option("--word-freq", cfg.word_frequencies, "Word frequency file");
  cmd->add_option("--gamma", cfg.gamma, "Per-stroke primitive cost")->check(CLI::NonNegativeNumber);
  cmd->add_option("--variant-cost", cfg.variant_cost, "Flat cost of a variant form")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--c0", cfg.horizons, "Cumulative cost horizon (repeatable)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--mode", cfg.mode, "characters or words")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, po::Mode>{{"characters", po::Mode::Characters},
                                          {"words", po::Mode::Words}},
          CLI::ignore_case));
  cmd->add_option("--top-k", cfg.top_k, "Most frequent multi-character words kept")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--known", cfg.known, "Known-item file, or all-primitives");
  cmd->add_option("--target", cfg.target, "Target list; restricts the selection");
  cmd->add_option("--out", cfg.out_dir, "Output directory");
  cmd->add_flag("--charge-unlearned", cfg.charge_unlearned,
                "Charge unlearned components when scoring");
  cmd->add_flag("!--no-variant-closure", cfg.traverse_variants,
                "Do not follow variant edges in closures");
  cmd->add_option("--min-n", cfg.min_reported_n, "Smallest prefix written to cluster CSVs");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimize and score hierarchal learning orders for Chinese characters and words"};
  app.require_subcommand(1);
  app.footer(std::string("Inputs default to files in $") + po::kDataDirEnv + " when set.");

  po::RunConfig cfg;
  auto* order = app.add_subcommand("order", "Build the optimized order and its learning curves");
  auto* words = app.add_subcommand("words", "Build the word-level order (same as order --mode words)");
  auto* compare = app.add_subcommand("compare", "Compare orders side by side");
  auto* validate = app.add_subcommand("validate", "Check an order for hierarchy violations");
  auto* cluster = app.add_subcommand("cluster", "Clustering statistics for an order");
  for (auto* cmd : {order, words, compare, validate, cluster}) add_inputs(cmd, cfg);
  compare->add_option("orders", cfg.orders,
                      "Order files, or @optimized / @pure-frequency")
      ->required();
  validate->add_option("order", cfg.orders, "Order file")->required()->expected(1);
  cluster->add_option("order", cfg.orders, "Order file (default: optimized)")->expected(0, 1);

  CLI11_PARSE(app, argc, argv);

  po::apply_data_dir(cfg);

  if (order->parsed()) return po::cmd_order(cfg, std::cout, std::cerr);
  if (words->parsed()) return po::cmd_words(cfg, std::cout, std::cerr);
  if (compare->parsed()) return po::cmd_compare(cfg, std::cout, std::cerr);
  if (validate->parsed()) return po::cmd_validate(cfg, std::cout, std::cerr);
  if (cluster->parsed()) return po::cmd_cluster(cfg, std::cout, std::cerr);
  return po::kInputError;
}
