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
#include <iterator>
#include <vector>

#include <gtest/gtest.h>

#include "antimagic/errors.h"
#include "antimagic/graph.h"
#include "antimagic/wheel.h"

namespace antimagic {
namespace {

VertexId W(int i, int j) { return VertexId::Product(i, j); }
Edge E(VertexId a, VertexId b) { return Edge::Make(a, b); }

bool EvidenceEmpty(const VerificationReport& r) {
  return r.unlabeled_edges.empty() && r.extraneous_edges.empty() &&
         r.missing_labels.empty() && r.duplicate_labels.empty() &&
         r.out_of_range_labels.empty() && r.colliding_pairs.empty();
}

TEST(VerifyTest, PathOfOneEdgeCollides) {
  const Graph p2 = BuildPath(2);
  EdgeLabeling l(1);
  l.Assign(p2.edges()[0], 1);
  const VerificationReport r = VerifyAntimagic(p2, l);
  EXPECT_TRUE(r.bijective);
  EXPECT_FALSE(r.antimagic);
  ASSERT_EQ(r.colliding_pairs.size(), 1u);
  EXPECT_EQ(r.colliding_pairs[0],
            (SumCollision{VertexId::Base(1), VertexId::Base(2), 1}));
}

TEST(VerifyTest, PathOfTwoEdges) {
  const Graph p3 = BuildPath(3);
  EdgeLabeling l(2);
  l.Assign(E(VertexId::Base(1), VertexId::Base(2)), 1);
  l.Assign(E(VertexId::Base(2), VertexId::Base(3)), 2);
  const VerificationReport r = VerifyAntimagic(p3, l);
  EXPECT_TRUE(r.antimagic);
  EXPECT_EQ(VertexSums(p3, l),
            (VertexSumProfile{{VertexId::Base(1), 1},
                              {VertexId::Base(2), 3},
                              {VertexId::Base(3), 2}}));
}

TEST(VerifyTest, WheelSingleLeafSums) {
  const Graph g = TensorProduct(BuildWheel(3), BuildStar(1));
  const EdgeLabeling l = LabelWheelProduct(3, 1);
  const VerificationReport r = VerifyAntimagic(g, l);
  EXPECT_TRUE(r.antimagic);
  const VertexSumProfile expected = {
      {W(0, 0), 27}, {W(1, 1), 10}, {W(2, 1), 22}, {W(3, 1), 16},
      {W(1, 0), 21}, {W(2, 0), 13}, {W(3, 0), 17}, {W(0, 1), 30}};
  EXPECT_EQ(VertexSums(g, l), expected);
  EXPECT_TRUE(HandshakeCheck(g, l));
  Sum total = 0;
  for (const auto& [v, s] : VertexSums(g, l)) total += s;
  EXPECT_EQ(total, 156);
}

TEST(VerifyTest, PrintedWheelLabelingDuplicatesFive) {
  const Graph g = TensorProduct(BuildWheel(3), BuildStar(1));
  const SchemeOutcome printed = EvaluateWheelProduct(3, 1, SchemeVariant::AsPrinted());
  const VerificationReport r = VerifyAntimagic(g, printed.labeling);
  EXPECT_FALSE(r.bijective);
  EXPECT_FALSE(r.antimagic);
  // Both rim families share one formula, so odd i repeats mn+in+j and even
  // i repeats in+j.
  ASSERT_EQ(r.duplicate_labels.size(), 2u);
  EXPECT_EQ(r.duplicate_labels[0].label, 3);
  EXPECT_EQ(r.duplicate_labels[0].edges,
            (std::vector<Edge>{E(W(2, 0), W(3, 1)), E(W(2, 1), W(3, 0))}));
  EXPECT_EQ(r.duplicate_labels[1].label, 5);
  EXPECT_EQ(r.duplicate_labels[1].edges,
            (std::vector<Edge>{E(W(1, 0), W(2, 1)), E(W(1, 1), W(2, 0))}));
  EXPECT_EQ(r.missing_labels, (std::vector<Label>{2, 6}));
}

TEST(VerifyTest, ReportsTotalityAndRangeProblems) {
  const Graph p3 = BuildPath(3);
  EdgeLabeling l(2);
  l.Assign(E(VertexId::Base(1), VertexId::Base(2)), 7);
  l.Assign(E(VertexId::Base(1), VertexId::Base(3)), 1);
  const VerificationReport r = VerifyAntimagic(p3, l);
  EXPECT_FALSE(r.total);
  EXPECT_EQ(r.unlabeled_edges,
            std::vector<Edge>{E(VertexId::Base(2), VertexId::Base(3))});
  EXPECT_EQ(r.extraneous_edges,
            std::vector<Edge>{E(VertexId::Base(1), VertexId::Base(3))});
  EXPECT_EQ(r.out_of_range_labels, std::vector<Label>{7});
  EXPECT_FALSE(r.antimagic);
  EXPECT_THROW(VertexSums(p3, l), TotalityError);
}

TEST(LabelingTest, AssignRejectsRelabel) {
  EdgeLabeling l(1);
  const Edge e = E(VertexId::Base(1), VertexId::Base(2));
  l.Assign(e, 1);
  EXPECT_THROW(l.Assign(e, 1), InvalidArgument);
  l.Set(e, 2);
  EXPECT_EQ(l.Find(e), 2);
}

TEST(VerifyProperty, IdempotentAndFlagMatchesEvidence) {
  for (int m = 3; m <= 6; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const Graph g = TensorProduct(BuildWheel(m), BuildStar(n));
      for (const SchemeVariant& v :
           {SchemeVariant::Errata(), SchemeVariant::AsPrinted()}) {
        const EdgeLabeling l = EvaluateWheelProduct(m, n, v).labeling;
        const VerificationReport a = VerifyAntimagic(g, l);
        EXPECT_EQ(a, VerifyAntimagic(g, l));
        EXPECT_EQ(a.antimagic, EvidenceEmpty(a));
        if (a.total) EXPECT_TRUE(HandshakeCheck(g, l));
      }
    }
  }
}

// Rotating the rim u1 -> u2 -> ... -> um -> u1 and cycling the leaves is an
// automorphism of W_m x K_{1,n}.
TEST(VerifyProperty, InvariantUnderAutomorphism) {
  for (int m = 3; m <= 6; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const Graph g = TensorProduct(BuildWheel(m), BuildStar(n));
      auto map = [&](const VertexId& v) {
        const int i = v.i == 0 ? 0 : v.i % m + 1;
        const int j = v.j == 0 ? 0 : v.j % n + 1;
        return W(i, j);
      };
      for (const SchemeVariant& variant :
           {SchemeVariant::Errata(), SchemeVariant::AsPrinted()}) {
        const EdgeLabeling l = EvaluateWheelProduct(m, n, variant).labeling;
        EdgeLabeling moved(l.target_q());
        for (const auto& [e, label] : l.assignments()) {
          const Edge image = E(map(e.a), map(e.b));
          ASSERT_TRUE(g.Contains(image));
          moved.Assign(image, label);
        }
        EXPECT_EQ(VerifyAntimagic(g, l).antimagic,
                  VerifyAntimagic(g, moved).antimagic);
      }
    }
  }
}

TEST(VerifyProperty, CorruptingOneLabelIsPinpointed) {
  const int m = 4, n = 2;
  const Graph g = TensorProduct(BuildWheel(m), BuildStar(n));
  const EdgeLabeling good = LabelWheelProduct(m, n);
  ASSERT_TRUE(VerifyAntimagic(g, good).antimagic);
  for (const auto& [e, label] : good.assignments()) {
    EdgeLabeling bad = good;
    const Label other = label == 1 ? 2 : label - 1;
    bad.Set(e, other);
    const VerificationReport r = VerifyAntimagic(g, bad);
    EXPECT_FALSE(r.antimagic);
    ASSERT_EQ(r.duplicate_labels.size(), 1u);
    EXPECT_EQ(r.duplicate_labels[0].label, other);
    EXPECT_NE(std::find(r.duplicate_labels[0].edges.begin(),
                        r.duplicate_labels[0].edges.end(), e),
              r.duplicate_labels[0].edges.end());
    EXPECT_EQ(r.missing_labels, std::vector<Label>{label});
  }
}

TEST(VerifyProperty, SwapsNeverPassSilently) {
  const int m = 3, n = 2;
  const Graph g = TensorProduct(BuildWheel(m), BuildStar(n));
  const EdgeLabeling good = LabelWheelProduct(m, n);
  const auto& a = good.assignments();
  for (auto x = a.begin(); x != a.end(); ++x) {
    for (auto y = std::next(x); y != a.end(); ++y) {
      EdgeLabeling swapped = good;
      swapped.Set(x->first, y->second);
      swapped.Set(y->first, x->second);
      const VerificationReport r = VerifyAntimagic(g, swapped);
      EXPECT_TRUE(r.bijective);
      EXPECT_EQ(r.antimagic, r.colliding_pairs.empty());
      EXPECT_TRUE(HandshakeCheck(g, swapped));
    }
  }
}

}  // namespace
}  // namespace antimagic
