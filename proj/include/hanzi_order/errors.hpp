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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace hanzi_order {

// Base for every error raised by the library. Callers that only need a
// diagnostic can catch this and print what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Raised for malformed identifiers and nodes whose kind disagrees with
// their component list.
class InvalidNode : public Error {
 public:
  using Error::Error;
};

class DuplicateId : public Error {
 public:
  explicit DuplicateId(const std::string& id)
      : Error("duplicate glyph id: " + id), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class DanglingReference : public Error {
 public:
  DanglingReference(const std::string& owner, const std::string& id)
      : Error("node " + owner + " references unknown component " + id),
        id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class CycleDetected : public Error {
 public:
  explicit CycleDetected(std::vector<std::string> cycle)
      : Error(describe(cycle)), cycle_(std::move(cycle)) {}

  // Witness path; first and last entries are the same id.
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  static std::string describe(const std::vector<std::string>& cycle) {
    std::string out = "decomposition cycle:";
    for (const auto& id : cycle) out += " " + id;
    return out;
  }
  std::vector<std::string> cycle_;
};

class UnknownId : public Error {
 public:
  explicit UnknownId(const std::string& id)
      : Error("unknown glyph id: " + id), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class DuplicateToken : public Error {
 public:
  DuplicateToken(std::size_t line, const std::string& token)
      : Error("line " + std::to_string(line) + ": duplicate token " + token),
        line_(line),
        token_(token) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

class EmptyTable : public Error {
 public:
  EmptyTable() : Error("frequency table is empty") {}
};

class NotTopological : public Error {
 public:
  explicit NotTopological(std::size_t violations)
      : Error("order is not hierarchal: " + std::to_string(violations) +
              " violation(s)"),
        violations_(violations) {}
  std::size_t violations() const noexcept { return violations_; }

 private:
  std::size_t violations_;
};

class NonPositiveHorizon : public Error {
 public:
  explicit NonPositiveHorizon(double c0)
      : Error("horizon C0 must be positive, got " + std::to_string(c0)) {}
};

class TooLarge : public Error {
 public:
  TooLarge(std::size_t size, std::size_t limit)
      : Error("exhaustive search over " + std::to_string(size) +
              " nodes exceeds the limit of " + std::to_string(limit)) {}
};

}  // namespace hanzi_order
