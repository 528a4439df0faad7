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

#include "antimagic/labeling.h"

#include <algorithm>
#include <string>
#include <tuple>

#include "antimagic/errors.h"

namespace antimagic {

void EdgeLabeling::Assign(const Edge& e, Label label) {
  auto [it, inserted] = assignments_.emplace(e, label);
  if (!inserted) throw InvalidArgument("edge labeled twice: " + ToString(e));
}

std::optional<Label> EdgeLabeling::Find(const Edge& e) const {
  auto it = assignments_.find(e);
  if (it == assignments_.end()) return std::nullopt;
  return it->second;
}

VertexSumProfile VertexSums(const Graph& g, const EdgeLabeling& labeling) {
  for (const auto& [e, label] : labeling.assignments()) {
    if (!g.Contains(e)) throw TotalityError("label on non-edge " + ToString(e));
  }
  VertexSumProfile sums;
  for (const VertexId& v : g.vertices()) sums[v] = 0;
  for (const Edge& e : g.edges()) {
    auto label = labeling.Find(e);
    if (!label) throw TotalityError("unlabeled edge " + ToString(e));
    sums[e.a] += *label;
    sums[e.b] += *label;
  }
  return sums;
}

VerificationReport VerifyAntimagic(const Graph& g, const EdgeLabeling& labeling) {
  VerificationReport report;
  for (const auto& [e, label] : labeling.assignments()) {
    if (!g.Contains(e)) report.extraneous_edges.push_back(e);
  }

  const Label q = labeling.target_q();
  std::map<Label, std::vector<Edge>> by_label;
  std::vector<Sum> sums(g.order(), 0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Edge& e = g.edges()[k];
    auto label = labeling.Find(e);
    if (!label) {
      report.unlabeled_edges.push_back(e);
      continue;
    }
    by_label[*label].push_back(e);
    sums[*g.IndexOf(e.a)] += *label;
    sums[*g.IndexOf(e.b)] += *label;
  }
  report.total =
      report.unlabeled_edges.empty() && report.extraneous_edges.empty();

  for (const auto& [label, edges] : by_label) {
    if (label < 1 || label > q) report.out_of_range_labels.push_back(label);
    if (edges.size() > 1) report.duplicate_labels.push_back({label, edges});
  }
  for (Label l = 1; l <= q; ++l) {
    if (!by_label.contains(l)) report.missing_labels.push_back(l);
  }
  report.bijective = report.total && static_cast<Label>(g.size()) == q &&
                     report.missing_labels.empty() &&
                     report.duplicate_labels.empty() &&
                     report.out_of_range_labels.empty();

  std::map<Sum, std::vector<std::size_t>> by_sum;
  for (std::size_t v = 0; v < g.order(); ++v) by_sum[sums[v]].push_back(v);
  for (const auto& [sum, members] : by_sum) {
    for (std::size_t x = 0; x < members.size(); ++x) {
      for (std::size_t y = x + 1; y < members.size(); ++y) {
        report.colliding_pairs.push_back(
            {g.vertices()[members[x]], g.vertices()[members[y]], sum});
      }
    }
  }
  std::sort(report.colliding_pairs.begin(), report.colliding_pairs.end(),
            [](const SumCollision& l, const SumCollision& r) {
              return std::tie(l.u, l.v) < std::tie(r.u, r.v);
            });

  report.antimagic = report.bijective && report.colliding_pairs.empty();
  return report;
}

bool HandshakeCheck(const VertexSumProfile& sums, const EdgeLabeling& labeling) {
  Sum vertex_total = 0;
  for (const auto& [v, s] : sums) vertex_total += s;
  Sum label_total = 0;
  for (const auto& [e, label] : labeling.assignments()) label_total += label;
  return vertex_total == 2 * label_total;
}

bool HandshakeCheck(const Graph& g, const EdgeLabeling& labeling) {
  return HandshakeCheck(VertexSums(g, labeling), labeling);
}

}  // namespace antimagic
