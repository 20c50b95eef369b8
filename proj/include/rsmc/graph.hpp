// Copyright 2026 The rsmc Authors
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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace rsmc {

using Vertex = std::size_t;

struct Edge {
  Vertex source = 0;
  Vertex target = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Weighted graph over dense vertex indices 0..n-1. Edge weights are the
// direct relation strengths between adjacent vertices: strictly positive,
// no self-loops, at most one edge per ordered pair (per unordered pair when
// undirected, stored with source <= target). Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Validates every invariant; throws WeightError, DuplicateEdgeError or
  // InputError. Undirected edges are canonicalized to source <= target.
  // `labels` is either empty or holds one entry per vertex.
  Graph(std::size_t vertex_count, std::vector<Edge> edges, bool directed,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool directed() const { return directed_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }

  // External label of `v`, or its index rendered as text when unlabeled.
  std::string label(Vertex v) const;

  // Same topology with every weight multiplied by `alpha` (> 0).
  Graph scaled(double alpha) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  bool directed_ = false;
  std::vector<std::string> labels_;
};

struct ParsedGraph {
  Graph graph;
  std::size_t self_loops_dropped = 0;
};

// Parses `src<TAB>dst[<TAB>weight]` lines. `#` lines and blank lines are
// skipped; vertices are numbered in order of first appearance.
ParsedGraph parse_edge_list(std::string_view text, bool directed);

// Inverse of parse_edge_list for graphs without isolated vertices. Weights are
// written in shortest round-trip form.
std::string serialize_edge_list(const Graph& g);

struct ComponentPartition {
  std::vector<std::size_t> assignment;
  std::size_t component_count = 0;

  // Vertices of each component, in ascending order.
  std::vector<std::vector<Vertex>> members() const;
};

// Partition by reachability in the underlying undirected graph. Component ids
// follow the smallest vertex they contain.
ComponentPartition connected_components(const Graph& g);

// reachable[u][v] is true iff a path u -> v exists (respecting direction when
// g is directed). Every vertex reaches itself.
std::vector<std::vector<bool>> reachability(const Graph& g);

// Undirected adjacency lists; each entry is (neighbor, weight).
std::vector<std::vector<std::pair<Vertex, double>>> undirected_adjacency(
    const Graph& g);

}  // namespace rsmc
