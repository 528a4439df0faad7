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

#include "antimagic/graph.h"

#include <algorithm>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "antimagic/errors.h"

namespace antimagic {
namespace {

std::vector<std::size_t> DegreeMultiset(const Graph& g) {
  std::vector<std::size_t> out;
  for (const VertexId& v : g.vertices()) out.push_back(g.Degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

struct Named {
  std::string name;
  Graph graph;
};

// Connected factors used for the Weichsel comparison.
std::vector<Named> Factors() {
  std::vector<Named> out;
  for (int k = 2; k <= 4; ++k) out.push_back({"P" + std::to_string(k), BuildPath(k)});
  for (int k = 3; k <= 5; ++k) out.push_back({"C" + std::to_string(k), BuildCycle(k)});
  for (int k = 1; k <= 3; ++k) out.push_back({"K1," + std::to_string(k), BuildStar(k)});
  for (int k = 3; k <= 5; ++k) out.push_back({"W" + std::to_string(k), BuildWheel(k)});
  return out;
}

TEST(VertexNamesTest, RoundTrip) {
  EXPECT_EQ(ToString(VertexId::Base(7)), "u7");
  EXPECT_EQ(ToString(VertexId::Product(12, 3)), "w12_3");
  EXPECT_EQ(ParseVertex("w12_3"), VertexId::Product(12, 3));
  EXPECT_EQ(ParseVertex("u0"), VertexId::Base(0));
}

TEST(VertexNamesTest, RejectsMalformed) {
  for (const char* bad : {"", "u", "w1", "w_1", "w1_", "x3", "u01", "u-1", "w1_2_3"}) {
    EXPECT_FALSE(ParseVertex(bad).has_value()) << bad;
  }
}

TEST(EdgeTest, CanonicalOrderAndLoop) {
  const Edge e = Edge::Make(VertexId::Base(3), VertexId::Base(1));
  EXPECT_EQ(e.a, VertexId::Base(1));
  EXPECT_EQ(e.b, VertexId::Base(3));
  EXPECT_THROW(Edge::Make(VertexId::Base(2), VertexId::Base(2)), InvalidArgument);
}

TEST(GraphTest, RejectsParallelAndDanglingEdges) {
  const auto u = [](int i) { return VertexId::Base(i); };
  EXPECT_THROW(Graph({u(1), u(2)}, {Edge::Make(u(1), u(2)), Edge::Make(u(2), u(1))}),
               InvalidArgument);
  EXPECT_THROW(Graph({u(1)}, {Edge::Make(u(1), u(2))}), InvalidArgument);
}

TEST(BuildersTest, Star) {
  const Graph p2 = BuildStar(1);
  EXPECT_EQ(p2.order(), 2u);
  EXPECT_EQ(p2.size(), 1u);
  const Graph s3 = BuildStar(3);
  EXPECT_EQ(s3.order(), 4u);
  EXPECT_EQ(s3.size(), 3u);
  EXPECT_EQ(DegreeMultiset(s3), (std::vector<std::size_t>{1, 1, 1, 3}));
  const Graph s5 = BuildStar(5);
  EXPECT_EQ(s5.Degree(VertexId::Base(0)), 5u);
  EXPECT_THROW(BuildStar(0), InvalidArgument);
}

TEST(BuildersTest, WheelHelmFlower) {
  const Graph w3 = BuildWheel(3);
  EXPECT_EQ(w3.order(), 4u);
  EXPECT_EQ(w3.size(), 6u);
  EXPECT_EQ(DegreeMultiset(w3), DegreeMultiset(BuildComplete(4)));

  const Graph h3 = BuildHelm(3);
  EXPECT_EQ(h3.order(), 7u);
  EXPECT_EQ(h3.size(), 9u);
  const auto h3_degrees = DegreeMultiset(h3);
  EXPECT_EQ(std::count(h3_degrees.begin(), h3_degrees.end(), 1u), 3);

  const Graph f4 = BuildFlower(4);
  EXPECT_EQ(f4.order(), 9u);
  EXPECT_EQ(f4.size(), 16u);
  EXPECT_EQ(f4.Degree(VertexId::Base(0)), 8u);

  for (auto build : {BuildWheel, BuildHelm, BuildFlower}) {
    EXPECT_THROW(build(2), InvalidArgument);
    EXPECT_THROW(build(kMaxParameter + 1), InvalidArgument);
  }
}

TEST(TensorProductTest, Examples) {
  const Graph w = TensorProduct(BuildWheel(3), BuildStar(1));
  EXPECT_EQ(w.order(), 8u);
  EXPECT_EQ(w.size(), 12u);
  EXPECT_TRUE(w.Contains(VertexId::Product(0, 0)));

  const Graph pp = TensorProduct(BuildPath(2), BuildPath(2));
  EXPECT_EQ(pp.order(), 4u);
  EXPECT_EQ(pp.size(), 2u);
  EXPECT_FALSE(IsConnected(pp));

  // (2m+1)(n+1) vertices.
  EXPECT_EQ(TensorProduct(BuildHelm(3), BuildStar(2)).order(), 21u);
  EXPECT_EQ(TensorProduct(BuildHelm(3), BuildStar(2)).size(), 36u);
  EXPECT_EQ(TensorProduct(BuildFlower(3), BuildStar(2)).order(), 21u);
  EXPECT_EQ(TensorProduct(BuildFlower(3), BuildStar(2)).size(), 48u);
}

TEST(TensorProductTest, RejectsProductFactors) {
  const Graph w = TensorProduct(BuildWheel(3), BuildStar(1));
  EXPECT_THROW(TensorProduct(w, BuildStar(1)), InvalidArgument);
}

TEST(TraversalTest, Examples) {
  EXPECT_TRUE(IsBipartite(BuildCycle(4)));
  EXPECT_FALSE(IsBipartite(BuildCycle(3)));
  EXPECT_TRUE(IsConnected(TensorProduct(BuildWheel(5), BuildStar(3))));
  EXPECT_TRUE(WeichselConnected(BuildWheel(3), BuildStar(2)));
  EXPECT_FALSE(WeichselConnected(BuildPath(3), BuildStar(2)));
}

TEST(TraversalTest, WeichselRejectsDisconnectedFactor) {
  const auto u = [](int i) { return VertexId::Base(i); };
  const Graph two_edges({u(1), u(2), u(3), u(4)},
                        {Edge::Make(u(1), u(2)), Edge::Make(u(3), u(4))});
  EXPECT_THROW(WeichselConnected(two_edges, BuildCycle(3)), InvalidArgument);
}

TEST(TensorProductProperty, EdgeCountAndDegreeProduct) {
  const auto factors = Factors();
  for (const Named& g : factors) {
    for (const Named& h : factors) {
      SCOPED_TRACE(g.name + " x " + h.name);
      const Graph p = TensorProduct(g.graph, h.graph);
      EXPECT_EQ(p.order(), g.graph.order() * h.graph.order());
      EXPECT_EQ(p.size(), 2 * g.graph.size() * h.graph.size());
      for (const VertexId& x : g.graph.vertices()) {
        for (const VertexId& y : h.graph.vertices()) {
          EXPECT_EQ(p.Degree(VertexId::Product(x.i, y.i)),
                    g.graph.Degree(x) * h.graph.Degree(y));
        }
      }
    }
  }
}

TEST(TensorProductProperty, SwapPreservesCountsAndDegrees) {
  const auto factors = Factors();
  for (const Named& g : factors) {
    for (const Named& h : factors) {
      SCOPED_TRACE(g.name + " x " + h.name);
      const Graph gh = TensorProduct(g.graph, h.graph);
      const Graph hg = TensorProduct(h.graph, g.graph);
      EXPECT_EQ(gh.order(), hg.order());
      EXPECT_EQ(gh.size(), hg.size());
      EXPECT_EQ(DegreeMultiset(gh), DegreeMultiset(hg));
    }
  }
}

TEST(TensorProductProperty, WeichselMatchesTraversal) {
  const auto factors = Factors();
  for (const Named& g : factors) {
    for (const Named& h : factors) {
      SCOPED_TRACE(g.name + " x " + h.name);
      EXPECT_EQ(WeichselConnected(g.graph, h.graph),
                IsConnected(TensorProduct(g.graph, h.graph)));
    }
  }
}

TEST(FamilyTest, ParseAndPrint) {
  for (Family f : {Family::kPath, Family::kCycle, Family::kStar, Family::kWheel,
                   Family::kHelm, Family::kFlower}) {
    EXPECT_EQ(ParseFamily(ToString(f)), f);
  }
  EXPECT_FALSE(ParseFamily("tree").has_value());
}

}  // namespace
}  // namespace antimagic
