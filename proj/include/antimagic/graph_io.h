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

#ifndef ANTIMAGIC_GRAPH_IO_H_
#define ANTIMAGIC_GRAPH_IO_H_

#include <string>
#include <string_view>

#include "antimagic/graph.h"
#include "antimagic/labeling.h"

namespace antimagic {

// Edge list: header "p q", then one "u v" line per edge in canonical order.
std::string WriteEdgeList(const Graph& g);
// Throws FormatError on a bad header, bad vertex name, wrong line count, or a
// vertex count that the edges do not realize (isolated vertices).
Graph ReadEdgeList(std::string_view text);

struct LabeledGraph {
  Graph graph;
  EdgeLabeling labeling;
};

// Header "p q", then "u v label" for every labeled graph edge. The labeling's
// target q is written as the header edge count.
std::string WriteLabeledEdgeList(const Graph& g, const EdgeLabeling& labeling);
// The graph is the set of listed edges; target q is taken from the header.
LabeledGraph ReadLabeledEdgeList(std::string_view text);

// Graphviz rendering. Node labels are vertex sums and edge labels are edge
// labels; unlabeled edges carry no label attribute.
std::string WriteDot(const Graph& g, const EdgeLabeling& labeling);

}  // namespace antimagic

#endif  // ANTIMAGIC_GRAPH_IO_H_
