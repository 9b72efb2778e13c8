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

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hanzi_order/costmodel.hpp"
#include "hanzi_order/errors.hpp"
#include "hanzi_order/export.hpp"
#include "hanzi_order/format.hpp"
#include "hanzi_order/ingest.hpp"
#include "hanzi_order/metrics.hpp"
#include "hanzi_order/network.hpp"
#include "hanzi_order/ordering.hpp"
#include "hanzi_order/words.hpp"

// Orchestration behind the command-line tool: load inputs, build the
// order, evaluate it and write output files. Each command returns the
// process exit code.
namespace hanzi_order::pipeline {

namespace fs = std::filesystem;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kDataDirEnv = "HANZI_ORDER_DATA";

inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;  // parse or validation failure
inline constexpr int kCycle = 2;       // decomposition cycle
inline constexpr int kViolations = 3;  // validate found problems

enum class Mode { Characters, Words };

// Order sources accepted by `compare` besides file paths.
inline constexpr const char* kOptimizedOrder = "@optimized";
inline constexpr const char* kFrequencyOrder = "@pure-frequency";

struct RunConfig {
  fs::path decompositions;
  fs::path frequencies;
  fs::path word_frequencies;
  fs::path known;  // one id per line, or the literal "all-primitives"
  fs::path target;
  std::vector<fs::path> orders;
  fs::path out_dir = "out";
  double gamma = 0.1;
  double variant_cost = 1.0;
  std::vector<double> horizons = {500.0, 1500.0};
  Mode mode = Mode::Characters;
  std::size_t top_k = 10000;
  bool charge_unlearned = false;
  bool traverse_variants = true;
  std::size_t min_reported_n = 250;
  std::uint64_t seed = 0;  // fixture generation only; the pipeline is deterministic
};

// Fills unset input paths from the default data directory.
inline void apply_data_dir(RunConfig& cfg) {
  const char* env = std::getenv(kDataDirEnv);
  if (!env || !*env) return;
  const fs::path dir(env);
  if (cfg.decompositions.empty()) cfg.decompositions = dir / "decompositions.tsv";
  if (cfg.frequencies.empty()) cfg.frequencies = dir / "char_freq.tsv";
  if (cfg.word_frequencies.empty()) cfg.word_frequencies = dir / "word_freq.tsv";
}

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

// Loaded and validated inputs shared by all commands.
struct Inputs {
  DecompositionNetwork network;
  FrequencyTable freq;
  CostParams params;
  CentralityTable table;
  std::vector<GlyphId> dropped_words;
  std::vector<GlyphId> missing_targets;
  std::vector<NodeIndex> selection;
};

inline Inputs load_inputs(const RunConfig& cfg) {
  if (cfg.decompositions.empty()) throw Error("no decomposition file given");
  for (double h : cfg.horizons)
    if (!(h > 0.0)) throw NonPositiveHorizon(h);

  Inputs in;
  NetworkOptions options;
  options.traverse_variants = cfg.traverse_variants;
  auto base = DecompositionNetwork::build(
      parse_decompositions(read_file(cfg.decompositions)), options);

  if (cfg.mode == Mode::Words) {
    if (cfg.word_frequencies.empty()) throw Error("words mode needs a word frequency file");
    WordNetworkConfig wcfg;
    wcfg.top_k = cfg.top_k;
    auto expanded = expand_with_words(base, parse_frequencies(read_file(cfg.word_frequencies)), wcfg);
    for (const auto& d : expanded.dropped) in.dropped_words.push_back(d.word);
    in.network = std::move(expanded.network);
    in.freq = std::move(expanded.freq);
  } else {
    if (cfg.frequencies.empty()) throw Error("no frequency file given");
    in.network = std::move(base);
    in.freq = parse_frequencies(read_file(cfg.frequencies));
  }

  in.params.gamma = cfg.gamma;
  in.params.variant_cost = cfg.variant_cost;
  if (!cfg.known.empty()) {
    if (cfg.known == "all-primitives") {
      for (const auto& node : in.network.nodes())
        if (is_primitive(node.kind)) in.params.known.insert(node.id);
    } else {
      for (auto& id : parse_order(read_file(cfg.known))) {
        if (!in.network.contains(id)) throw UnknownId(id.str());
        in.params.known.insert(std::move(id));
      }
    }
  }
  in.table = centralities(in.network, in.freq, in.params);

  if (!cfg.target.empty()) {
    auto target = parse_target_list(read_file(cfg.target), cfg.target.stem().string());
    for (const auto& id : target.items) {
      if (auto idx = in.network.find(id))
        in.selection.push_back(*idx);
      else
        in.missing_targets.push_back(id);
    }
  } else {
    for (NodeIndex i = 0; i < in.network.size(); ++i)
      if (in.table[i].f > 0.0) in.selection.push_back(i);
  }
  return in;
}

// Runs `body`, mapping library errors to exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const CycleDetected& e) {
    err << "error: " << e.what() << '\n';
    return kCycle;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

inline std::string mode_name(Mode m) { return m == Mode::Words ? "words" : "characters"; }

inline std::string cost_mode_name(CostMode m) {
  return m == CostMode::Hierarchal ? "hierarchal" : "charge-unlearned";
}

inline void write_curve_files(const fs::path& stem, const LearningCurve& c) {
  std::ostringstream csv;
  write_curve_csv(csv, c);
  write_file(stem.string() + ".csv", csv.str());
  write_file(stem.string() + ".json", curve_summary(c).dump(2) + "\n");
}

// Optimized order, its curve at every horizon and a summary JSON.
inline int cmd_order(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto in = load_inputs(cfg);
    fs::create_directories(cfg.out_dir);
    auto order = priority_topo_sort(in.network, in.table,
                                    std::span<const NodeIndex>(in.selection));
    std::ostringstream csv;
    write_order_csv(csv, in.network, in.table, order);
    write_file(cfg.out_dir / "order.csv", csv.str());

    const auto cost_mode =
        cfg.charge_unlearned ? CostMode::ChargeUnlearnedComponents : CostMode::Hierarchal;
    nlohmann::ordered_json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["command"] = "order";
    summary["mode"] = mode_name(cfg.mode);
    summary["cost_mode"] = cost_mode_name(cost_mode);
    summary["gamma"] = cfg.gamma;
    summary["n_items"] = order.size();
    summary["coverage"] = in.freq.coverage(in.network);
    summary["horizons"] = nlohmann::ordered_json::array();
    for (double h : cfg.horizons) {
      auto c = curve(in.network, in.table, order, h, cost_mode);
      write_curve_files(cfg.out_dir / ("curve_c0_" + shortest(h)), c);
      summary["horizons"].push_back(curve_summary(c));
      out << "C0=" << shortest(h) << "  N=" << c.n_learned
          << "  lambda_f=" << fixed(c.lambda_f, 3)
          << "  lambda_avg=" << fixed(c.lambda_avg, 3) << '\n';
    }
    if (!in.dropped_words.empty()) {
      summary["dropped_words"] = nlohmann::ordered_json::array();
      for (const auto& w : in.dropped_words) summary["dropped_words"].push_back(w.str());
    }
    if (!in.missing_targets.empty()) {
      summary["missing_targets"] = nlohmann::ordered_json::array();
      for (const auto& w : in.missing_targets) summary["missing_targets"].push_back(w.str());
    }
    write_file(cfg.out_dir / "summary.json", summary.dump(2) + "\n");
    out << "wrote " << order.size() << " items to " << (cfg.out_dir / "order.csv").string()
        << '\n';
    return kOk;
  });
}

// Same as `order` with word frequencies driving the network.
inline int cmd_words(RunConfig cfg, std::ostream& out, std::ostream& err) {
  cfg.mode = Mode::Words;
  return cmd_order(cfg, out, err);
}

inline std::optional<LearningOrder> load_order(const Inputs& in, const fs::path& source,
                                               std::ostream& err) {
  const auto name = source.string();
  if (name == kOptimizedOrder)
    return priority_topo_sort(in.network, in.table, std::span<const NodeIndex>(in.selection));
  if (name == kFrequencyOrder)
    return pure_frequency_order(in.network, in.table,
                                std::span<const NodeIndex>(in.selection));
  try {
    auto ids = parse_order(read_file(source));
    return external_order(in.network, in.table, ids);
  } catch (const std::exception& e) {
    err << "error: " << name << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

inline std::string order_label(const fs::path& source) {
  const auto name = source.string();
  if (name.rfind('@', 0) == 0) return name.substr(1);
  return source.stem().string();
}

// Side-by-side efficiencies for several orders. Each order is evaluated in
// charging mode, and in hierarchal mode when it is hierarchal.
inline int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto in = load_inputs(cfg);
    fs::create_directories(cfg.out_dir);
    std::vector<ReportRow> rows;
    int status = kOk;
    nlohmann::ordered_json summary;
    summary["schema_version"] = kSchemaVersion;
    summary["command"] = "compare";
    summary["orders"] = nlohmann::ordered_json::array();
    for (const auto& source : cfg.orders) {
      auto order = load_order(in, source, err);
      if (!order) {
        status = kInputError;
        continue;
      }
      const auto label = order_label(source);
      const bool hierarchal = validate_topological(in.network, *order).empty();
      if (!hierarchal)
        err << "note: " << label << " is not hierarchal (NotTopological); "
            << "evaluated with unlearned components charged only\n";

      nlohmann::ordered_json entry;
      entry["label"] = label;
      entry["hierarchal"] = hierarchal;
      std::vector<CostMode> modes;
      if (hierarchal && !cfg.charge_unlearned) modes.push_back(CostMode::Hierarchal);
      modes.push_back(CostMode::ChargeUnlearnedComponents);
      for (auto mode : modes) {
        ReportRow row;
        row.label = label + "/" + cost_mode_name(mode);
        auto& results = entry["curves"][cost_mode_name(mode)] = nlohmann::ordered_json::array();
        for (double h : cfg.horizons) {
          auto c = curve(in.network, in.table, *order, h, mode);
          write_curve_files(cfg.out_dir / (label + "." + cost_mode_name(mode) + ".c0_" +
                                            shortest(h)),
                            c);
          results.push_back(curve_summary(c));
          row.curves.emplace_back(std::move(c));
        }
        rows.push_back(std::move(row));
      }
      auto stats = cluster_stats(in.network, *order, order->size(), cfg.min_reported_n);
      std::ostringstream cluster_csv;
      write_cluster_csv(cluster_csv, stats);
      write_file(cfg.out_dir / (label + ".cluster.csv"), cluster_csv.str());
      summary["orders"].push_back(std::move(entry));
    }
    const auto report = table_report(rows, cfg.horizons);
    write_file(cfg.out_dir / "report.tsv", report);
    write_file(cfg.out_dir / "compare.json", summary.dump(2) + "\n");
    out << report;
    return status;
  });
}

// Hierarchy and coverage check of a single order file.
inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (cfg.orders.size() != 1) throw Error("validate expects exactly one order file");
    auto in = load_inputs(cfg);
    auto ids = parse_order(read_file(cfg.orders.front()));
    if (ids.empty()) {
      err << "warning: order is empty\n";
      out << "clean: 0 items\n";
      return kOk;
    }
    std::vector<GlyphId> known_ids;
    std::size_t unknown = 0;
    for (auto& id : ids) {
      if (in.network.contains(id)) {
        known_ids.push_back(std::move(id));
      } else {
        out << "unknown\t" << id.str() << '\n';
        ++unknown;
      }
    }
    auto order = external_order(in.network, in.table, known_ids);
    auto violations = validate_topological(in.network, order);
    std::size_t missing = 0;
    for (const auto& v : violations) {
      out << (v.missing ? "missing\t" : "after\t") << v.compound.str() << '\t'
          << v.component.str() << '\n';
      if (v.missing) ++missing;
    }
    double coverage = 0.0;
    for (const auto& item : order.items) coverage += item.freq;
    out << violations.size() << " violation(s), " << missing << " missing, " << unknown
        << " unknown; cumulative frequency " << fixed(coverage, 6) << '\n';
    return violations.empty() && unknown == 0 ? kOk : kViolations;
  });
}

// Clustering statistics for an order file, or for the optimized order when
// no file is given.
inline int cmd_cluster(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto in = load_inputs(cfg);
    fs::create_directories(cfg.out_dir);
    const fs::path source = cfg.orders.empty() ? fs::path(kOptimizedOrder) : cfg.orders.front();
    auto order = load_order(in, source, err);
    if (!order) return kInputError;
    auto stats = cluster_stats(in.network, *order, order->size(), cfg.min_reported_n);
    std::ostringstream csv;
    write_cluster_csv(csv, stats);
    const auto path = cfg.out_dir / (order_label(source) + ".cluster.csv");
    write_file(path, csv.str());
    if (!stats.rows.empty()) {
      const auto& last = stats.rows.back();
      out << "n=" << last.n << "  avg_d1=" << (last.avg_d1 ? fixed(*last.avg_d1, 3) : "-")
          << "  avg_d2=" << (last.avg_d2 ? fixed(*last.avg_d2, 3) : "-") << '\n';
    }
    out << "wrote " << path.string() << '\n';
    return kOk;
  });
}

}  // namespace hanzi_order::pipeline
