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

#include "antimagic/conformance.h"

#include <set>
#include <string>

#include "antimagic/flower.h"
#include "antimagic/helm.h"
#include "antimagic/wheel.h"

namespace antimagic {
namespace {

std::string Num(Sum v) { return std::to_string(v); }

std::string FirstViolation(const ConformanceReport& r) {
  if (!r.label_coverage.empty()) return r.label_coverage.front().Describe();
  const VerificationReport& v = r.verification;
  if (!v.unlabeled_edges.empty()) {
    return "unlabeled edge " + ToString(v.unlabeled_edges.front());
  }
  if (!v.extraneous_edges.empty()) {
    return "label on non-edge " + ToString(v.extraneous_edges.front());
  }
  if (!v.out_of_range_labels.empty()) {
    return "label " + Num(v.out_of_range_labels.front()) + " outside 1.." +
           Num(r.q);
  }
  if (!v.duplicate_labels.empty()) {
    const DuplicateLabel& d = v.duplicate_labels.front();
    std::string out = "label " + Num(d.label) + " on";
    for (const Edge& e : d.edges) out += " " + ToString(e);
    return out;
  }
  if (!v.missing_labels.empty()) {
    return "label " + Num(v.missing_labels.front()) + " never assigned";
  }
  if (!v.colliding_pairs.empty()) {
    const SumCollision& c = v.colliding_pairs.front();
    return "sum " + Num(c.sum) + " at both " + ToString(c.u) + " and " +
           ToString(c.v);
  }
  if (!r.handshake) return "vertex sums do not total twice the labels";
  if (!r.handshake_full) return "vertex sums do not total q(q+1)";
  if (!r.expected_coverage.empty()) {
    return "expected sums: " + r.expected_coverage.front().Describe();
  }
  if (!r.mismatches.empty()) {
    const SumMismatch& s = r.mismatches.front();
    return "sum at " + ToString(s.vertex) + " is " + Num(s.observed) +
           ", printed " + Num(s.expected);
  }
  if (r.degree_two_in_range == false) {
    return "degree-2 sums leave {2m+2, ..., 6m} or repeat";
  }
  return "";
}

}  // namespace

SchemeOutcome EvaluateScheme(SchemeFamily family, int m, int n,
                             const SchemeVariant& variant) {
  switch (family) {
    case SchemeFamily::kWheel: return EvaluateWheelProduct(m, n, variant);
    case SchemeFamily::kHelm: return EvaluateHelmProduct(m, n, variant);
    case SchemeFamily::kFlower: return EvaluateFlowerProduct(m, n, variant);
  }
  return {};
}

ExpectedProfile EvaluateExpectedSums(SchemeFamily family, int m, int n,
                                     const SchemeVariant& variant) {
  switch (family) {
    case SchemeFamily::kWheel: return EvaluateExpectedWheelSums(m, n, variant);
    case SchemeFamily::kHelm: return EvaluateExpectedHelmSums(m, n, variant);
    case SchemeFamily::kFlower:
      return EvaluateExpectedFlowerSums(m, n, variant);
  }
  return {};
}

EdgeLabeling LabelScheme(SchemeFamily family, int m, int n,
                         const SchemeVariant& variant) {
  return RequireCovered(EvaluateScheme(family, m, n, variant));
}

VertexSumProfile PartialVertexSums(const Graph& g, const EdgeLabeling& labeling) {
  VertexSumProfile sums;
  for (const VertexId& v : g.vertices()) sums[v] = 0;
  for (const Edge& e : g.edges()) {
    if (auto label = labeling.Find(e)) {
      sums[e.a] += *label;
      sums[e.b] += *label;
    }
  }
  return sums;
}

ConformanceReport Conformance(SchemeFamily family, int m, int n,
                              const SchemeVariant& variant) {
  ConformanceReport r;
  r.family = family;
  r.m = m;
  r.n = n;
  r.mode = variant.mode();

  const Graph g = SchemeGraph(family, m, n);
  SchemeOutcome outcome = EvaluateScheme(family, m, n, variant);
  r.function = outcome.function;
  r.case_class = outcome.case_class;
  r.q = outcome.labeling.target_q();
  r.label_coverage = outcome.coverage;
  r.branch_hits = outcome.branch_hits;
  r.references = outcome.references;
  for (const ErrataEntry* e : variant.Notes(family)) {
    r.errata_applied.emplace_back(e->id);
  }

  r.verification = VerifyAntimagic(g, outcome.labeling);
  const VertexSumProfile observed = PartialVertexSums(g, outcome.labeling);
  r.handshake = HandshakeCheck(observed, outcome.labeling);
  Sum total = 0;
  for (const auto& [v, s] : observed) total += s;
  r.handshake_full = total == r.q * (r.q + 1);
  r.observed_center = observed.at(VertexId::Product(0, 0));

  const ExpectedProfile expected = EvaluateExpectedSums(family, m, n, variant);
  r.expected_coverage = expected.coverage;
  r.expected_branch_hits = expected.branch_hits;
  r.sums_unspecified = expected.unspecified.size();
  if (auto it = expected.sums.find(VertexId::Product(0, 0));
      it != expected.sums.end()) {
    r.expected_center = it->second;
  }
  if (r.verification.total) {
    for (const auto& [v, want] : expected.sums) {
      ++r.sums_compared;
      const Sum got = observed.at(v);
      if (got != want) r.mismatches.push_back({v, got, want});
    }
  }
  r.sums_match = r.verification.total && r.expected_coverage.empty() &&
                 r.mismatches.empty();

  if (family == SchemeFamily::kFlower && n == 1) {
    bool ok = true;
    std::set<Sum> seen;
    for (int i = m + 1; i <= 2 * m; ++i) {
      for (int j = 0; j <= 1; ++j) {
        const Sum s = observed.at(VertexId::Product(i, j));
        if (s < 2 * m + 2 || s > 6 * m || s % 2 != 0) ok = false;
        if (!seen.insert(s).second) ok = false;
      }
    }
    r.degree_two_in_range = ok;
  }

  r.first_violation = FirstViolation(r);
  r.pass = r.first_violation.empty();
  return r;
}

ConformanceReport WheelConformance(int m, int n, const SchemeVariant& variant) {
  return Conformance(SchemeFamily::kWheel, m, n, variant);
}

ConformanceReport HelmConformance(int m, int n, const SchemeVariant& variant) {
  return Conformance(SchemeFamily::kHelm, m, n, variant);
}

ConformanceReport FlowerConformance(int m, int n, const SchemeVariant& variant) {
  return Conformance(SchemeFamily::kFlower, m, n, variant);
}

}  // namespace antimagic
