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

#include "antimagic/formula.h"

#include <utility>

namespace antimagic {

std::string_view ToString(CoverageIssue::Kind kind) {
  switch (kind) {
    case CoverageIssue::Kind::kUncovered: return "uncovered";
    case CoverageIssue::Kind::kOverlap: return "overlap";
    case CoverageIssue::Kind::kUndefinedReference: return "undefined-reference";
    case CoverageIssue::Kind::kUnboundIndex: return "unbound-index";
  }
  return "uncovered";
}

std::string CoverageIssue::Describe() const {
  std::string out = std::string(ToString(kind)) + " in " + formula + " at " + cell;
  if (!branches.empty()) {
    out += " [";
    for (std::size_t k = 0; k < branches.size(); ++k) {
      if (k > 0) out += "; ";
      out += branches[k];
    }
    out += "]";
  }
  if (!detail.empty()) out += ": " + detail;
  return out;
}

template <typename B>
std::optional<std::size_t> FormulaContext::Pick(
    std::string_view formula, std::string_view cell,
    std::initializer_list<B> branches) {
  std::vector<std::size_t> hits;
  std::size_t k = 0;
  for (const B& b : branches) {
    if (b.applies) hits.push_back(k);
    ++k;
  }
  if (hits.size() == 1) {
    const B& chosen = *(branches.begin() + hits[0]);
    ++branch_hits_[std::string(formula) + " | " + std::string(chosen.name)];
    return hits[0];
  }
  CoverageIssue issue;
  issue.formula = std::string(formula);
  issue.cell = std::string(cell);
  if (hits.empty()) {
    issue.kind = CoverageIssue::Kind::kUncovered;
    issue.detail = "no branch applies";
  } else {
    issue.kind = CoverageIssue::Kind::kOverlap;
    for (std::size_t h : hits) {
      issue.branches.emplace_back((branches.begin() + h)->name);
    }
    issue.detail = std::to_string(hits.size()) + " branches apply";
  }
  issues_.push_back(std::move(issue));
  return std::nullopt;
}

std::optional<Value> FormulaContext::Select(
    std::string_view formula, std::string_view cell,
    std::initializer_list<Branch> branches) {
  auto k = Pick(formula, cell, branches);
  if (!k) return std::nullopt;
  return (branches.begin() + *k)->value;
}

std::optional<Value> FormulaContext::SelectLazy(
    std::string_view formula, std::string_view cell,
    std::initializer_list<LazyBranch> branches) {
  auto k = Pick(formula, cell, branches);
  if (!k) return std::nullopt;
  return (branches.begin() + *k)->value();
}

Value FormulaContext::Single(std::string_view formula, Value value) {
  ++branch_hits_[std::string(formula)];
  return value;
}

std::nullopt_t FormulaContext::Fail(CoverageIssue::Kind kind,
                                    std::string_view formula,
                                    std::string_view cell, std::string detail) {
  issues_.push_back({kind, std::string(formula), std::string(cell), {},
                     std::move(detail)});
  return std::nullopt;
}

}  // namespace antimagic
