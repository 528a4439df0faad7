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

#ifndef ANTIMAGIC_GRAPH_H_
#define ANTIMAGIC_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace antimagic {

// Largest m or n accepted by the family builders and labeling schemes. The
// biggest closed-form sum is Theta(m^2 n^2), far inside int64 at this bound.
inline constexpr int kMaxParameter = 10000;

enum class VertexRole : std::uint8_t { kBase = 0, kProduct = 1 };

// u<i> for a factor vertex, w<i>_<j> for the product vertex (u_i, v_j).
struct VertexId {
  VertexRole role = VertexRole::kBase;
  int i = 0;
  int j = 0;

  static constexpr VertexId Base(int i) { return {VertexRole::kBase, i, 0}; }
  static constexpr VertexId Product(int i, int j) {
    return {VertexRole::kProduct, i, j};
  }

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;
};

std::string ToString(const VertexId& v);
std::optional<VertexId> ParseVertex(std::string_view text);

// Unordered pair stored with a < b.
struct Edge {
  VertexId a;
  VertexId b;

  // Orders the endpoints; throws InvalidArgument on a loop.
  static Edge Make(VertexId x, VertexId y);

  bool Touches(const VertexId& v) const { return a == v || b == v; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string ToString(const Edge& e);

enum class Family : std::uint8_t {
  kPath,
  kCycle,
  kStar,
  kWheel,
  kHelm,
  kFlower,
  kProduct,
  kOther,
};

std::string_view ToString(Family f);
std::optional<Family> ParseFamily(std::string_view text);

// For products, m and n are the parameters of the left and right factors.
struct FamilyTag {
  Family family = Family::kOther;
  int m = 0;
  int n = 0;
  Family left = Family::kOther;
  Family right = Family::kOther;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

// Immutable simple undirected graph with canonically ordered vertices and
// edges.
class Graph {
 public:
  Graph() = default;
  // Sorts and validates: rejects loops, parallel edges and dangling endpoints.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges,
        FamilyTag tag = {});

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }
  const FamilyTag& tag() const { return tag_; }

  bool Contains(const VertexId& v) const;
  bool Contains(const Edge& e) const;
  std::optional<std::size_t> IndexOf(const VertexId& v) const;
  std::optional<std::size_t> EdgeIndexOf(const Edge& e) const;

  // Indices into vertices() of the neighbours of vertices()[index].
  std::span<const std::size_t> Neighbors(std::size_t index) const {
    return adjacency_[index];
  }
  // Indices into edges() of the edges incident to vertices()[index].
  std::span<const std::size_t> IncidentEdges(std::size_t index) const {
    return incidence_[index];
  }
  std::size_t Degree(const VertexId& v) const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  FamilyTag tag_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::vector<std::size_t>> incidence_;
};

// Family builders. Base vertices carry the indexing used by the labeling
// formulas: hub u0, rim u1..um, pendant or outer u(m+1)..u(2m), star leaves
// u1..un around the star center u0.
Graph BuildPath(int m);
Graph BuildCycle(int m);
Graph BuildStar(int n);
Graph BuildWheel(int m);
Graph BuildHelm(int m);
Graph BuildFlower(int m);
Graph BuildComplete(int k);

// Both factors must consist of base vertices. (x1,y1)~(x2,y2) iff x1~x2 and
// y1~y2; the pair (u_i, v_j) becomes w<i>_<j>.
Graph TensorProduct(const Graph& g, const Graph& h);

bool IsConnected(const Graph& g);
bool IsBipartite(const Graph& g);

// True iff at least one factor has an odd cycle. Both factors must be
// connected and have at least one edge; throws InvalidArgument otherwise.
bool WeichselConnected(const Graph& g, const Graph& h);

}  // namespace antimagic

#endif  // ANTIMAGIC_GRAPH_H_
