// Copyright 2026 The antimagic Authors
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

#ifndef ANTIMAGIC_FORMULA_H_
#define ANTIMAGIC_FORMULA_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace antimagic {

using Value = std::int64_t;

// One guarded case of a piecewise definition.
struct Branch {
  std::string_view name;
  bool applies = false;
  Value value = 0;
};

// A case whose value depends on another formula; evaluated only if selected.
struct LazyBranch {
  std::string_view name;
  bool applies = false;
  std::function<std::optional<Value>()> value;
};

struct CoverageIssue {
  enum class Kind : std::uint8_t {
    kUncovered,
    kOverlap,
    kUndefinedReference,
    kUnboundIndex,
  };

  Kind kind = Kind::kUncovered;
  std::string formula;
  std::string cell;
  std::vector<std::string> branches;
  std::string detail;

  std::string Describe() const;
  friend bool operator==(const CoverageIssue&, const CoverageIssue&) = default;
};

std::string_view ToString(CoverageIssue::Kind kind);

// Evaluates piecewise formulas with explicit guards. A cell matched by zero
// or several guards yields no value and records a CoverageIssue; nothing is
// ever picked silently.
class FormulaContext {
 public:
  std::optional<Value> Select(std::string_view formula, std::string_view cell,
                              std::initializer_list<Branch> branches);
  std::optional<Value> SelectLazy(std::string_view formula,
                                  std::string_view cell,
                                  std::initializer_list<LazyBranch> branches);
  // An unconditional formula; still counted in the hit table.
  Value Single(std::string_view formula, Value value);

  // The formula is printed in terms of a cell or index that does not exist.
  std::nullopt_t Fail(CoverageIssue::Kind kind, std::string_view formula,
                      std::string_view cell, std::string detail);

  // Records that a formula was evaluated through another scheme's cell.
  void Reference(std::string what) { ++references_[std::move(what)]; }

  const std::map<std::string, std::size_t>& branch_hits() const {
    return branch_hits_;
  }
  const std::map<std::string, std::size_t>& references() const {
    return references_;
  }
  const std::vector<CoverageIssue>& issues() const { return issues_; }

 private:
  template <typename B>
  std::optional<std::size_t> Pick(std::string_view formula,
                                  std::string_view cell,
                                  std::initializer_list<B> branches);

  std::map<std::string, std::size_t> branch_hits_;
  std::map<std::string, std::size_t> references_;
  std::vector<CoverageIssue> issues_;
};

inline std::optional<Value> Shift(std::optional<Value> v, Value delta) {
  if (!v) return std::nullopt;
  return *v + delta;
}

}  // namespace antimagic

#endif  // ANTIMAGIC_FORMULA_H_
