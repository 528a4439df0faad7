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

#include "antimagic/helm.h"

#include <gtest/gtest.h>

#include "antimagic/conformance.h"
#include "antimagic/errors.h"

namespace antimagic {
namespace {

VertexId W(int i, int j) { return VertexId::Product(i, j); }

Label LabelOf(const EdgeLabeling& l, VertexId a, VertexId b) {
  return l.Find(Edge::Make(a, b)).value();
}

TEST(HelmClassTest, Classification) {
  EXPECT_EQ(HelmCaseClass(5, 3), CaseClass::kGPrime);
  EXPECT_EQ(HelmCaseClass(3, 5), CaseClass::kGDoublePrime);
  EXPECT_EQ(HelmCaseClass(3, 2), CaseClass::kGTriplePrime);
  EXPECT_EQ(HelmCaseClass(3, 3), CaseClass::kGPrime);
  EXPECT_THROW(HelmCaseClass(3, 1), InvalidArgument);
  EXPECT_EQ(HelmFunctionName(3, 1), "f1");
  EXPECT_EQ(HelmFunctionName(3, 5), "g''");
}

TEST(HelmSingleTest, Labels) {
  EXPECT_EQ(LabelOf(LabelHelmSingle(3), W(1, 1), W(4, 0)), 1);
  EXPECT_EQ(LabelOf(LabelHelmSingle(4), W(1, 0), W(5, 1)), 6);
}

TEST(HelmSingleTest, ExpectedSums) {
  EXPECT_EQ(ExpectedHelmSums(4, 1).at(W(0, 0)), 52);
  EXPECT_EQ(ExpectedHelmSums(5, 1).at(W(0, 1)), 130);
  // At m = 3 the printed sum table has overlapping rows at w2_0; the center
  // row is still unambiguous.
  const ExpectedProfile p3 = EvaluateExpectedHelmSums(3, 1, SchemeVariant::Errata());
  EXPECT_EQ(p3.sums.at(W(0, 0)), 30);
  ASSERT_EQ(p3.coverage.size(), 1u);
  EXPECT_EQ(p3.coverage[0].kind, CoverageIssue::Kind::kOverlap);
  EXPECT_EQ(p3.coverage[0].cell, "w2_0");
}

TEST(HelmSingleTest, ConformanceRecordsBranchCounts) {
  for (int m = 3; m <= 10; ++m) {
    SCOPED_TRACE(m);
    const ConformanceReport r = HelmConformance(m, 1, SchemeVariant::Errata());
    EXPECT_EQ(r.function, "f1");
    EXPECT_FALSE(r.branch_hits.empty());
    EXPECT_TRUE(r.verification.antimagic);
    EXPECT_EQ(r.observed_center, 3 * m * m + m);
    EXPECT_EQ(r.expected_center, 3 * m * m + m);
  }
}

TEST(HelmPrimeTest, Labels) {
  FormulaContext ctx;
  EXPECT_EQ(HelmPrimeLabel({EdgeFamily::kHubSpoke, 3, 1}, 5, 3,
                           SchemeVariant::Errata(), ctx),
            68);
  EXPECT_EQ(LabelOf(LabelHelmProduct(5, 3), W(0, 0), W(3, 1)), 68);
  EXPECT_EQ(LabelOf(LabelHelmProduct(3, 2), W(0, 0), W(1, 1)), 26);
  EXPECT_TRUE(ctx.issues().empty());
}

TEST(HelmPrimeTest, CenterSum) {
  EXPECT_EQ(ExpectedHelmSums(5, 3).at(W(0, 0)), 1140);
  const ConformanceReport r = HelmConformance(5, 3, SchemeVariant::Errata());
  EXPECT_TRUE(r.pass) << r.first_violation;
  EXPECT_EQ(r.observed_center, 1140);
}

TEST(HelmPrimeTest, SpecialBranchesAtMFour) {
  const ConformanceReport r = HelmConformance(4, 2, SchemeVariant::Errata());
  EXPECT_TRUE(r.pass) << r.first_violation;
  std::size_t special = 0;
  for (const auto& [name, count] : r.branch_hits) {
    if (name.find("m=4") != std::string::npos) special += count;
  }
  EXPECT_EQ(special, 8u);
}

TEST(HelmProperty, PendantSumIsItsLabel) {
  for (int m = 3; m <= 7; ++m) {
    for (int n = 1; n <= 4; ++n) {
      SCOPED_TRACE(testing::Message() << "m=" << m << " n=" << n);
      const Graph g = SchemeGraph(SchemeFamily::kHelm, m, n);
      const EdgeLabeling l = LabelHelmProduct(m, n);
      const VertexSumProfile s = VertexSums(g, l);
      for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
          ASSERT_EQ(g.Degree(W(m + i, j)), 1u);
          EXPECT_EQ(s.at(W(m + i, j)), LabelOf(l, W(m + i, j), W(i, 0)));
        }
      }
    }
  }
}

TEST(HelmProperty, EdgeClassSizes) {
  for (int m = 3; m <= 6; ++m) {
    for (int n = 1; n <= 4; ++n) {
      std::size_t wheel_part = 0, pendant_inner = 0, pendant_outer = 0;
      for (const EdgeCell& c : SchemeCells(SchemeFamily::kHelm, m, n)) {
        if (c.family == EdgeFamily::kPendantInner) ++pendant_inner;
        else if (c.family == EdgeFamily::kPendantOuter) ++pendant_outer;
        else ++wheel_part;
      }
      const std::size_t mn = static_cast<std::size_t>(m * n);
      EXPECT_EQ(wheel_part, 4 * mn);
      EXPECT_EQ(pendant_inner, mn);
      EXPECT_EQ(pendant_outer, mn);
    }
  }
}

TEST(HelmProperty, ClassChoiceNeverChangesTheGraph) {
  const Graph odd_small = SchemeGraph(SchemeFamily::kHelm, 5, 3);
  EXPECT_EQ(odd_small.size(), 90u);
  EXPECT_EQ(EvaluateHelmProduct(5, 3, SchemeVariant::Errata()).function, "g'");
  EXPECT_EQ(EvaluateHelmProduct(3, 5, SchemeVariant::Errata()).function, "g''");
  EXPECT_EQ(EvaluateHelmProduct(4, 4, SchemeVariant::Errata()).function, "g'''");
  for (int m = 3; m <= 6; ++m) {
    for (int n = 2; n <= 6; ++n) {
      EXPECT_EQ(SchemeGraph(SchemeFamily::kHelm, m, n).edges().size(),
                TensorProduct(BuildHelm(m), BuildStar(n)).edges().size());
    }
  }
}

TEST(HelmProperty, ErrataLabelingsAreAntimagic) {
  for (int m = 3; m <= 9; ++m) {
    for (int n = 1; n <= 6; ++n) {
      SCOPED_TRACE(testing::Message() << "m=" << m << " n=" << n);
      const Graph g = SchemeGraph(SchemeFamily::kHelm, m, n);
      const EdgeLabeling l = LabelHelmProduct(m, n);
      EXPECT_TRUE(VerifyAntimagic(g, l).antimagic);
      EXPECT_TRUE(HandshakeCheck(g, l));
    }
  }
}

}  // namespace
}  // namespace antimagic
