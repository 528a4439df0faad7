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

#include "antimagic/graph_io.h"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "antimagic/conformance.h"
#include "antimagic/errors.h"

namespace antimagic {
namespace {

std::vector<std::string> Tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::int64_t ParseInt(const std::string& text, const std::string& what) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("bad " + what + ": '" + text + "'");
  }
  return v;
}

VertexId ParseName(const std::string& text, std::size_t line_no) {
  auto v = ParseVertex(text);
  if (!v) {
    throw FormatError("line " + std::to_string(line_no) +
                      ": bad vertex name '" + text + "'");
  }
  return *v;
}

// Non-blank lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> Lines(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto tokens = Tokens(text.substr(start, end - start));
    if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
    start = end + 1;
  }
  return out;
}

struct Parsed {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::vector<Edge> edges;
  std::vector<std::optional<Label>> labels;
};

Parsed Parse(std::string_view text, bool labeled) {
  const auto lines = Lines(text);
  if (lines.empty()) throw FormatError("missing 'p q' header");
  const auto& header = lines.front().second;
  if (header.size() != 2) throw FormatError("header must be 'p q'");
  Parsed out;
  out.p = ParseInt(header[0], "vertex count");
  out.q = ParseInt(header[1], "edge count");
  if (out.p < 0 || out.q < 0) throw FormatError("negative header count");
  const std::size_t width = labeled ? 3 : 2;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& [line_no, tok] = lines[k];
    if (tok.size() != width) {
      throw FormatError("line " + std::to_string(line_no) + ": expected " +
                        (labeled ? "'u v label'" : "'u v'"));
    }
    const VertexId u = ParseName(tok[0], line_no);
    const VertexId v = ParseName(tok[1], line_no);
    if (u == v) {
      throw FormatError("line " + std::to_string(line_no) + ": loop at " +
                        tok[0]);
    }
    out.edges.push_back(Edge::Make(u, v));
    if (labeled) out.labels.push_back(ParseInt(tok[2], "label"));
  }
  return out;
}

Graph BuildFromEdges(const Parsed& parsed, bool check_count) {
  std::set<VertexId> vertices;
  std::set<Edge> seen;
  for (const Edge& e : parsed.edges) {
    if (!seen.insert(e).second) {
      throw FormatError("edge listed twice: " + ToString(e));
    }
    vertices.insert(e.a);
    vertices.insert(e.b);
  }
  if (check_count && static_cast<std::int64_t>(parsed.edges.size()) != parsed.q) {
    throw FormatError("header announces " + std::to_string(parsed.q) +
                      " edges, found " + std::to_string(parsed.edges.size()));
  }
  if (static_cast<std::int64_t>(vertices.size()) != parsed.p) {
    throw FormatError("header announces " + std::to_string(parsed.p) +
                      " vertices, edges touch " +
                      std::to_string(vertices.size()));
  }
  return Graph({vertices.begin(), vertices.end()}, parsed.edges);
}

}  // namespace

std::string WriteEdgeList(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += ToString(e.a) + " " + ToString(e.b) + "\n";
  }
  return out;
}

Graph ReadEdgeList(std::string_view text) {
  return BuildFromEdges(Parse(text, false), true);
}

std::string WriteLabeledEdgeList(const Graph& g, const EdgeLabeling& labeling) {
  std::string out = std::to_string(g.order()) + " " +
                    std::to_string(labeling.target_q()) + "\n";
  for (const Edge& e : g.edges()) {
    if (auto label = labeling.Find(e)) {
      out += ToString(e.a) + " " + ToString(e.b) + " " + std::to_string(*label) +
             "\n";
    }
  }
  return out;
}

LabeledGraph ReadLabeledEdgeList(std::string_view text) {
  const Parsed parsed = Parse(text, true);
  LabeledGraph out{BuildFromEdges(parsed, false), EdgeLabeling(parsed.q)};
  for (std::size_t k = 0; k < parsed.edges.size(); ++k) {
    out.labeling.Assign(parsed.edges[k], *parsed.labels[k]);
  }
  return out;
}

std::string WriteDot(const Graph& g, const EdgeLabeling& labeling) {
  const VertexSumProfile sums = PartialVertexSums(g, labeling);
  std::string out = "graph G {\n";
  for (const VertexId& v : g.vertices()) {
    out += "  \"" + ToString(v) + "\" [label=\"" + std::to_string(sums.at(v)) +
           "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  \"" + ToString(e.a) + "\" -- \"" + ToString(e.b) + "\"";
    if (auto label = labeling.Find(e)) {
      out += " [label=\"" + std::to_string(*label) + "\"]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace antimagic
