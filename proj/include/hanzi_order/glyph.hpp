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
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hanzi_order/errors.hpp"

namespace hanzi_order {

// Identity of a character, component or word. Either a UTF-8 glyph string
// or a synthetic `x-<integer>` id for components without a code point.
class GlyphId {
 public:
  GlyphId() = default;
  GlyphId(std::string value) : value_(std::move(value)) {}
  GlyphId(const char* value) : value_(value) {}

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  bool is_synthetic() const noexcept {
    return value_.size() > 2 && value_.compare(0, 2, "x-") == 0;
  }

  // Empty ids and `x-` ids with a non-numeric suffix are rejected so that
  // synthetic ids can never shadow a real glyph string.
  bool is_well_formed() const noexcept {
    if (value_.empty()) return false;
    if (value_.rfind("x-", 0) != 0) return true;
    return value_.size() > 2 &&
           std::all_of(value_.begin() + 2, value_.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  }

  friend auto operator<=>(const GlyphId&, const GlyphId&) = default;
  friend bool operator==(const GlyphId&, const GlyphId&) = default;

 private:
  std::string value_;
};

enum class GlyphKind : std::uint8_t {
  PrimitiveCharacter,
  PrimitiveComponent,
  Compound,
  Variant,
  Word,
};

inline bool is_primitive(GlyphKind kind) noexcept {
  return kind == GlyphKind::PrimitiveCharacter ||
         kind == GlyphKind::PrimitiveComponent;
}

// Short codes used in the decomposition file and CSV output.
inline std::string_view kind_code(GlyphKind kind) noexcept {
  switch (kind) {
    case GlyphKind::PrimitiveCharacter: return "p";
    case GlyphKind::PrimitiveComponent: return "pc";
    case GlyphKind::Compound: return "c";
    case GlyphKind::Variant: return "v";
    case GlyphKind::Word: return "w";
  }
  return "?";
}

struct GlyphNode {
  GlyphId id;
  GlyphKind kind = GlyphKind::PrimitiveCharacter;
  // Direct components in stored order, with multiplicity (品 = 口 口 口).
  std::vector<GlyphId> components;
  int strokes = 0;

  friend bool operator==(const GlyphNode&, const GlyphNode&) = default;
};

// Throws InvalidNode when the component count does not fit the kind.
inline void check_node_shape(const GlyphNode& node) {
  const auto n = node.components.size();
  const auto& id = node.id.str();
  if (!node.id.is_well_formed())
    throw InvalidNode("malformed glyph id '" + id + "'");
  if (node.strokes < 0)
    throw InvalidNode("negative stroke count for " + id);
  switch (node.kind) {
    case GlyphKind::PrimitiveCharacter:
    case GlyphKind::PrimitiveComponent:
      if (n != 0) throw InvalidNode("primitive " + id + " has components");
      break;
    case GlyphKind::Compound:
      if (n < 2)
        throw InvalidNode("compound " + id + " needs at least two components");
      break;
    case GlyphKind::Variant:
      if (n != 1)
        throw InvalidNode("variant " + id + " must reference exactly one glyph");
      break;
    case GlyphKind::Word:
      if (n < 2)
        throw InvalidNode("word " + id + " needs at least two characters");
      break;
  }
}

// Splits a UTF-8 string into its scalar values. Invalid lead bytes are
// passed through as single bytes.
inline std::vector<std::string> utf8_chars(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 1;
    if (lead >= 0xF0) len = 4;
    else if (lead >= 0xE0) len = 3;
    else if (lead >= 0xC0) len = 2;
    len = std::min(len, text.size() - i);
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

}  // namespace hanzi_order

template <>
struct std::hash<hanzi_order::GlyphId> {
  std::size_t operator()(const hanzi_order::GlyphId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
