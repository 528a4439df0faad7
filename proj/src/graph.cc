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
#include <charconv>
#include <deque>
#include <string>
#include <utility>

#include "antimagic/errors.h"

namespace antimagic {
namespace {

void CheckParameter(std::string_view what, int value, int min) {
  if (value < min || value > kMaxParameter) {
    throw InvalidArgument(std::string(what) + " must lie in [" +
                          std::to_string(min) + ", " +
                          std::to_string(kMaxParameter) + "], got " +
                          std::to_string(value));
  }
}

std::optional<int> ParseIndex(std::string_view text) {
  if (text.empty() || (text.size() > 1 && text[0] == '0')) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    return std::nullopt;
  }
  return value;
}

std::vector<VertexId> BaseVertices(int count) {
  std::vector<VertexId> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(VertexId::Base(i));
  return out;
}

Edge BaseEdge(int x, int y) {
  return Edge::Make(VertexId::Base(x), VertexId::Base(y));
}

// Rim u1..um closed into a cycle, plus the hub u0 joined to every rim vertex.
std::vector<Edge> WheelEdges(int m) {
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    edges.push_back(BaseEdge(0, i));
    edges.push_back(BaseEdge(i, i == m ? 1 : i + 1));
  }
  return edges;
}

}  // namespace

std::string ToString(const VertexId& v) {
  if (v.role == VertexRole::kBase) return "u" + std::to_string(v.i);
  return "w" + std::to_string(v.i) + "_" + std::to_string(v.j);
}

std::optional<VertexId> ParseVertex(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  if (text[0] == 'u') {
    auto i = ParseIndex(text.substr(1));
    if (!i) return std::nullopt;
    return VertexId::Base(*i);
  }
  if (text[0] == 'w') {
    auto sep = text.find('_');
    if (sep == std::string_view::npos) return std::nullopt;
    auto i = ParseIndex(text.substr(1, sep - 1));
    auto j = ParseIndex(text.substr(sep + 1));
    if (!i || !j) return std::nullopt;
    return VertexId::Product(*i, *j);
  }
  return std::nullopt;
}

Edge Edge::Make(VertexId x, VertexId y) {
  if (x == y) throw InvalidArgument("loop at " + ToString(x));
  if (y < x) std::swap(x, y);
  return Edge{x, y};
}

std::string ToString(const Edge& e) {
  return "(" + ToString(e.a) + "," + ToString(e.b) + ")";
}

std::string_view ToString(Family f) {
  switch (f) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kStar: return "star";
    case Family::kWheel: return "wheel";
    case Family::kHelm: return "helm";
    case Family::kFlower: return "flower";
    case Family::kProduct: return "product";
    case Family::kOther: return "other";
  }
  return "other";
}

std::optional<Family> ParseFamily(std::string_view text) {
  for (Family f : {Family::kPath, Family::kCycle, Family::kStar, Family::kWheel,
                   Family::kHelm, Family::kFlower, Family::kProduct,
                   Family::kOther}) {
    if (ToString(f) == text) return f;
  }
  return std::nullopt;
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges,
             FamilyTag tag)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), tag_(tag) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InvalidArgument("duplicate vertex in graph");
  }
  for (const Edge& e : edges_) {
    if (e.a == e.b) throw InvalidArgument("loop at " + ToString(e.a));
    if (e.b < e.a) throw InvalidArgument("edge not canonical: " + ToString(e));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidArgument("parallel edge " + ToString(*dup));
  }
  adjacency_.resize(vertices_.size());
  incidence_.resize(vertices_.size());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    auto a = IndexOf(edges_[k].a);
    auto b = IndexOf(edges_[k].b);
    if (!a || !b) {
      throw InvalidArgument("edge endpoint outside vertex set: " +
                            ToString(edges_[k]));
    }
    adjacency_[*a].push_back(*b);
    adjacency_[*b].push_back(*a);
    incidence_[*a].push_back(k);
    incidence_[*b].push_back(k);
  }
}

bool Graph::Contains(const VertexId& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::Contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::optional<std::size_t> Graph::IndexOf(const VertexId& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<std::size_t> Graph::EdgeIndexOf(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::size_t Graph::Degree(const VertexId& v) const {
  auto index = IndexOf(v);
  if (!index) throw InvalidArgument("no vertex " + ToString(v));
  return adjacency_[*index].size();
}

Graph BuildPath(int m) {
  CheckParameter("path order m", m, 1);
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.push_back(BaseEdge(i, i + 1));
  std::vector<VertexId> vertices;
  for (int i = 1; i <= m; ++i) vertices.push_back(VertexId::Base(i));
  return Graph(std::move(vertices), std::move(edges), {Family::kPath, m, 0});
}

Graph BuildCycle(int m) {
  CheckParameter("cycle order m", m, 3);
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) edges.push_back(BaseEdge(i, i == m ? 1 : i + 1));
  std::vector<VertexId> vertices;
  for (int i = 1; i <= m; ++i) vertices.push_back(VertexId::Base(i));
  return Graph(std::move(vertices), std::move(edges), {Family::kCycle, m, 0});
}

Graph BuildStar(int n) {
  CheckParameter("star size n", n, 1);
  std::vector<Edge> edges;
  for (int j = 1; j <= n; ++j) edges.push_back(BaseEdge(0, j));
  return Graph(BaseVertices(n + 1), std::move(edges), {Family::kStar, 0, n});
}

Graph BuildWheel(int m) {
  CheckParameter("wheel size m", m, 3);
  return Graph(BaseVertices(m + 1), WheelEdges(m), {Family::kWheel, m, 0});
}

Graph BuildHelm(int m) {
  CheckParameter("helm size m", m, 3);
  auto edges = WheelEdges(m);
  for (int i = 1; i <= m; ++i) edges.push_back(BaseEdge(i, m + i));
  return Graph(BaseVertices(2 * m + 1), std::move(edges),
               {Family::kHelm, m, 0});
}

Graph BuildFlower(int m) {
  CheckParameter("flower size m", m, 3);
  auto edges = WheelEdges(m);
  for (int i = 1; i <= m; ++i) {
    edges.push_back(BaseEdge(i, m + i));
    edges.push_back(BaseEdge(0, m + i));
  }
  return Graph(BaseVertices(2 * m + 1), std::move(edges),
               {Family::kFlower, m, 0});
}

Graph BuildComplete(int k) {
  CheckParameter("complete graph order k", k, 1);
  std::vector<Edge> edges;
  for (int x = 1; x <= k; ++x) {
    for (int y = x + 1; y <= k; ++y) edges.push_back(BaseEdge(x, y));
  }
  std::vector<VertexId> vertices;
  for (int i = 1; i <= k; ++i) vertices.push_back(VertexId::Base(i));
  return Graph(std::move(vertices), std::move(edges), {Family::kOther, k, 0});
}

Graph TensorProduct(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0) {
    throw InvalidArgument("tensor product needs nonempty factors");
  }
  for (const Graph* factor : {&g, &h}) {
    for (const VertexId& v : factor->vertices()) {
      if (v.role != VertexRole::kBase) {
        throw InvalidArgument("tensor product factors must be base graphs");
      }
    }
  }
  std::vector<VertexId> vertices;
  vertices.reserve(g.order() * h.order());
  for (const VertexId& x : g.vertices()) {
    for (const VertexId& y : h.vertices()) {
      vertices.push_back(VertexId::Product(x.i, y.i));
    }
  }
  std::vector<Edge> edges;
  edges.reserve(2 * g.size() * h.size());
  for (const Edge& e : g.edges()) {
    for (const Edge& f : h.edges()) {
      edges.push_back(Edge::Make(VertexId::Product(e.a.i, f.a.i),
                                 VertexId::Product(e.b.i, f.b.i)));
      edges.push_back(Edge::Make(VertexId::Product(e.a.i, f.b.i),
                                 VertexId::Product(e.b.i, f.a.i)));
    }
  }
  FamilyTag tag{Family::kProduct, g.tag().m, h.tag().n, g.tag().family,
                h.tag().family};
  if (h.tag().family != Family::kStar) tag.n = h.tag().m;
  return Graph(std::move(vertices), std::move(edges), tag);
}

bool IsConnected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : g.Neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == g.order();
}

bool IsBipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : g.Neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool WeichselConnected(const Graph& g, const Graph& h) {
  if (!IsConnected(g) || !IsConnected(h)) {
    throw InvalidArgument("connectivity criterion needs connected factors");
  }
  if (g.size() == 0 || h.size() == 0) {
    throw InvalidArgument("connectivity criterion needs factors with an edge");
  }
  return !IsBipartite(g) || !IsBipartite(h);
}

}  // namespace antimagic
