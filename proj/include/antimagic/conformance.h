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

#ifndef ANTIMAGIC_CONFORMANCE_H_
#define ANTIMAGIC_CONFORMANCE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "antimagic/formula.h"
#include "antimagic/labeling.h"
#include "antimagic/scheme.h"

namespace antimagic {

// Family dispatch over the three scheme modules.
SchemeOutcome EvaluateScheme(SchemeFamily family, int m, int n,
                             const SchemeVariant& variant);
ExpectedProfile EvaluateExpectedSums(SchemeFamily family, int m, int n,
                                     const SchemeVariant& variant);
// Throws CoverageError if any cell is uncovered or doubly covered.
EdgeLabeling LabelScheme(SchemeFamily family, int m, int n,
                         const SchemeVariant& variant);

struct SumMismatch {
  VertexId vertex;
  Sum observed = 0;
  Sum expected = 0;
  friend bool operator==(const SumMismatch&, const SumMismatch&) = default;
};

struct ConformanceReport {
  SchemeFamily family = SchemeFamily::kWheel;
  int m = 0;
  int n = 0;
  SchemeMode mode = SchemeMode::kErrata;
  std::string function;
  std::optional<CaseClass> case_class;
  Label q = 0;

  std::vector<CoverageIssue> label_coverage;
  std::map<std::string, std::size_t> branch_hits;
  std::map<std::string, std::size_t> references;
  std::vector<std::string> errata_applied;

  VerificationReport verification;
  // Sum of vertex sums equals twice the label total (over labeled edges).
  bool handshake = false;
  // Sum of vertex sums equals q(q+1).
  bool handshake_full = false;

  std::optional<Sum> observed_center;
  std::optional<Sum> expected_center;

  std::size_t sums_compared = 0;
  std::size_t sums_unspecified = 0;
  std::vector<CoverageIssue> expected_coverage;
  std::map<std::string, std::size_t> expected_branch_hits;
  std::vector<SumMismatch> mismatches;
  bool sums_match = false;

  // Flower n = 1 only: the degree-2 vertices carry distinct sums in
  // {2m+2, 2m+4, ..., 6m}.
  std::optional<bool> degree_two_in_range;

  bool pass = false;
  std::string first_violation;
};

ConformanceReport Conformance(SchemeFamily family, int m, int n,
                              const SchemeVariant& variant);
ConformanceReport WheelConformance(int m, int n, const SchemeVariant& variant);
ConformanceReport HelmConformance(int m, int n, const SchemeVariant& variant);
ConformanceReport FlowerConformance(int m, int n, const SchemeVariant& variant);

// Sums over the labeled graph edges only; never throws on partial labelings.
VertexSumProfile PartialVertexSums(const Graph& g, const EdgeLabeling& labeling);

}  // namespace antimagic

#endif  // ANTIMAGIC_CONFORMANCE_H_
