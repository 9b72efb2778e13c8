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

#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hanzi_order/errors.hpp"
#include "hanzi_order/glyph.hpp"
#include "hanzi_order/network.hpp"

namespace hanzi_order {

// Canonical text formats. All are UTF-8, one record per line, `\n`
// separated, with `#` comment lines and blank lines ignored.
//
//   decompositions: glyph<TAB>kind<TAB>components|-<TAB>strokes
//   frequencies:    token<TAB>count
//   orders / lists: one glyph per line (order CSVs are also accepted)

namespace detail {

struct Line {
  std::size_t number;
  std::string_view text;
};

inline std::vector<Line> records(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename Int>
bool parse_int(std::string_view s, Int& value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

inline GlyphKind parse_kind(std::string_view code, std::size_t line) {
  if (code == "p") return GlyphKind::PrimitiveCharacter;
  if (code == "pc") return GlyphKind::PrimitiveComponent;
  if (code == "c") return GlyphKind::Compound;
  if (code == "v") return GlyphKind::Variant;
  if (code == "w") return GlyphKind::Word;
  throw ParseError(line, "unknown kind '" + std::string(code) + "'");
}

}  // namespace detail

inline std::vector<GlyphNode> parse_decompositions(std::string_view text) {
  std::vector<GlyphNode> nodes;
  for (const auto& [number, line] : detail::records(text)) {
    auto fields = detail::split(line, '\t');
    if (fields.size() != 4)
      throw ParseError(number, "expected 4 tab-separated fields, got " +
                                   std::to_string(fields.size()));
    GlyphNode node;
    node.id = GlyphId(std::string(fields[0]));
    node.kind = detail::parse_kind(fields[1], number);
    if (fields[2] != "-") {
      for (auto c : detail::split(fields[2], ' '))
        if (!c.empty()) node.components.emplace_back(std::string(c));
    }
    long long strokes = 0;
    if (!detail::parse_int(fields[3], strokes))
      throw ParseError(number, "stroke count '" + std::string(fields[3]) +
                                   "' is not an integer");
    if (strokes < 0) throw ParseError(number, "negative stroke count");
    node.strokes = static_cast<int>(strokes);
    try {
      check_node_shape(node);
    } catch (const InvalidNode& e) {
      throw ParseError(number, e.what());
    }
    nodes.push_back(std::move(node));
  }
  return nodes;
}

// Canonical form: sorted by glyph id, single tabs.
inline std::string serialize_decompositions(std::vector<GlyphNode> nodes) {
  std::sort(nodes.begin(), nodes.end(),
            [](const GlyphNode& a, const GlyphNode& b) { return a.id < b.id; });
  std::string out;
  for (const auto& node : nodes) {
    out += node.id.str();
    out += '\t';
    out += kind_code(node.kind);
    out += '\t';
    if (node.components.empty()) {
      out += '-';
    } else {
      for (std::size_t i = 0; i < node.components.size(); ++i) {
        if (i) out += ' ';
        out += node.components[i].str();
      }
    }
    out += '\t';
    out += std::to_string(node.strokes);
    out += '\n';
  }
  return out;
}

// Usage counts normalized over the whole table, so every frequency is a
// share of the full corpus even when only part of it is in a network.
class FrequencyTable {
 public:
  FrequencyTable() = default;

  // Throws EmptyTable when `counts` is empty.
  explicit FrequencyTable(std::map<GlyphId, std::uint64_t> counts)
      : counts_(std::move(counts)) {
    if (counts_.empty()) throw EmptyTable();
    for (const auto& [id, count] : counts_) total_ += count;
  }

  double frequency(const GlyphId& id) const {
    auto it = counts_.find(id);
    if (it == counts_.end() || total_ == 0) return 0.0;
    return static_cast<double>(it->second) / static_cast<double>(total_);
  }

  bool contains(const GlyphId& id) const { return counts_.count(id) != 0; }
  std::uint64_t count(const GlyphId& id) const {
    auto it = counts_.find(id);
    return it == counts_.end() ? 0 : it->second;
  }
  std::uint64_t total_raw() const noexcept { return total_; }
  std::size_t size() const noexcept { return counts_.size(); }
  const std::map<GlyphId, std::uint64_t>& counts() const noexcept {
    return counts_;
  }

  // Cumulative frequency of the table entries that are network nodes.
  double coverage(const DecompositionNetwork& net) const {
    std::uint64_t covered = 0;
    for (const auto& [id, count] : counts_)
      if (net.contains(id)) covered += count;
    return total_ == 0 ? 0.0
                       : static_cast<double>(covered) / static_cast<double>(total_);
  }

 private:
  std::map<GlyphId, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

inline FrequencyTable parse_frequencies(std::string_view text) {
  std::map<GlyphId, std::uint64_t> counts;
  for (const auto& [number, line] : detail::records(text)) {
    auto fields = detail::split(line, '\t');
    if (fields.size() != 2)
      throw ParseError(number, "expected token<TAB>count");
    if (fields[0].empty()) throw ParseError(number, "empty token");
    std::uint64_t count = 0;
    if (!detail::parse_int(fields[1], count) || count == 0)
      throw ParseError(number, "count '" + std::string(fields[1]) +
                                   "' is not a positive integer");
    if (!counts.emplace(std::string(fields[0]), count).second)
      throw DuplicateToken(number, std::string(fields[0]));
  }
  return FrequencyTable(std::move(counts));
}

inline std::string serialize_frequencies(const FrequencyTable& table) {
  std::string out;
  for (const auto& [id, count] : table.counts()) {
    out += id.str();
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

// Reads one id per line. A file starting with the order CSV header
// `rank,glyph,...` is read from its glyph column instead.
inline std::vector<GlyphId> parse_order(std::string_view text) {
  std::vector<GlyphId> out;
  std::set<GlyphId> seen;
  bool csv = false;
  for (const auto& [number, line] : detail::records(text)) {
    std::string_view token = line;
    if (out.empty() && !csv && line.rfind("rank,glyph", 0) == 0) {
      csv = true;
      continue;
    }
    if (csv) {
      auto fields = detail::split(line, ',');
      if (fields.size() < 2) throw ParseError(number, "missing glyph column");
      token = fields[1];
    }
    if (token.find('\t') != std::string_view::npos)
      throw ParseError(number, "expected a single glyph per line");
    if (token.empty()) throw ParseError(number, "empty glyph");
    GlyphId id{std::string(token)};
    if (!seen.insert(id).second) throw DuplicateToken(number, id.str());
    out.push_back(std::move(id));
  }
  return out;
}

inline std::string serialize_order(const std::vector<GlyphId>& ids) {
  std::string out;
  for (const auto& id : ids) {
    out += id.str();
    out += '\n';
  }
  return out;
}

struct TargetList {
  std::string label;
  std::vector<GlyphId> items;
};

inline TargetList parse_target_list(std::string_view text, std::string label) {
  return TargetList{std::move(label), parse_order(text)};
}

struct CoverageReport {
  TargetList kept;
  std::vector<GlyphId> missing;
};

// Keeps the items that have a frequency entry. Segmenting raw text is not
// done here; `words` is expected to be pre-segmented.
inline CoverageReport segment_coverage(const TargetList& words,
                                       const FrequencyTable& freq) {
  CoverageReport report;
  report.kept.label = words.label;
  for (const auto& item : words.items) {
    if (freq.contains(item))
      report.kept.items.push_back(item);
    else
      report.missing.push_back(item);
  }
  return report;
}

}  // namespace hanzi_order
