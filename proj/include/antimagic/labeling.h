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

#ifndef ANTIMAGIC_LABELING_H_
#define ANTIMAGIC_LABELING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "antimagic/graph.h"

namespace antimagic {

using Label = std::int64_t;
using Sum = std::int64_t;

// Candidate labeling: any map from edges to integers. Validity (a bijection
// onto 1..target_q) is a verification result, not a construction invariant.
class EdgeLabeling {
 public:
  EdgeLabeling() = default;
  explicit EdgeLabeling(Label target_q) : target_q_(target_q) {}

  // Throws InvalidArgument if the edge already carries a label.
  void Assign(const Edge& e, Label label);
  // Replaces an existing label; used by mutation tests and search.
  void Set(const Edge& e, Label label) { assignments_[e] = label; }
  std::optional<Label> Find(const Edge& e) const;

  Label target_q() const { return target_q_; }
  void set_target_q(Label q) { target_q_ = q; }
  const std::map<Edge, Label>& assignments() const { return assignments_; }
  std::size_t size() const { return assignments_.size(); }

  friend bool operator==(const EdgeLabeling&, const EdgeLabeling&) = default;

 private:
  std::map<Edge, Label> assignments_;
  Label target_q_ = 0;
};

using VertexSumProfile = std::map<VertexId, Sum>;

struct DuplicateLabel {
  Label label = 0;
  std::vector<Edge> edges;

  friend bool operator==(const DuplicateLabel&, const DuplicateLabel&) = default;
};

struct SumCollision {
  VertexId u;
  VertexId v;
  Sum sum = 0;

  friend bool operator==(const SumCollision&, const SumCollision&) = default;
};

// All evidence lists are in canonical order. antimagic is true exactly when
// every evidence list is empty.
struct VerificationReport {
  bool total = false;
  std::vector<Edge> unlabeled_edges;
  std::vector<Edge> extraneous_edges;
  bool bijective = false;
  std::vector<Label> missing_labels;
  std::vector<DuplicateLabel> duplicate_labels;
  std::vector<Label> out_of_range_labels;
  std::vector<SumCollision> colliding_pairs;
  bool antimagic = false;

  friend bool operator==(const VerificationReport&,
                         const VerificationReport&) = default;
};

// Throws TotalityError naming the first unlabeled or extraneous edge.
VertexSumProfile VertexSums(const Graph& g, const EdgeLabeling& labeling);

// Never throws on bad labelings. Sums are taken over the labeled graph edges
// only, so a partial labeling still yields collision evidence.
VerificationReport VerifyAntimagic(const Graph& g, const EdgeLabeling& labeling);

// Sum over vertices equals twice the label total.
bool HandshakeCheck(const Graph& g, const EdgeLabeling& labeling);
bool HandshakeCheck(const VertexSumProfile& sums, const EdgeLabeling& labeling);

}  // namespace antimagic

#endif  // ANTIMAGIC_LABELING_H_
