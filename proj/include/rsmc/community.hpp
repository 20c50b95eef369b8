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
#include <span>
#include <utility>
#include <vector>

#include "rsmc/graph.hpp"
#include "rsmc/rsm.hpp"

namespace rsmc {

inline constexpr double kDefaultCompareTolerance = 1e-9;

// Undirected, unweighted graph of the vertex pairs whose relation strength is
// within epsilon in both directions.
class EffectiveEdgeGraph {
 public:
  // Throws InputError for self-pairs or out-of-range endpoints. Duplicate
  // pairs (in either orientation) are merged.
  EffectiveEdgeGraph(std::size_t vertex_count,
                     std::span<const std::pair<Vertex, Vertex>> edges,
                     double epsilon = 0.0,
                     RsmSource rsm = RsmSource::kExternal);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  double epsilon() const { return epsilon_; }
  RsmSource rsm() const { return rsm_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  // All pairs (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  double epsilon_ = 0.0;
  RsmSource rsm_ = RsmSource::kExternal;
  std::vector<char> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

// Refinement: keep {u, v} iff m(u,v) <= epsilon + tol and m(v,u) <= epsilon +
// tol; +inf never survives. Throws NegativeEpsilonError when epsilon < 0 and
// InputError when tol < 0 or m is not square.
EffectiveEdgeGraph refine(const RsmMatrix& m, double epsilon,
                          double tol = kDefaultCompareTolerance);

struct Community {
  std::vector<Vertex> members;  // sorted ascending, nonempty
  bool maximal = false;
  double epsilon = 0.0;
  RsmSource rsm = RsmSource::kExternal;

  friend bool operator==(const Community&, const Community&) = default;
};

// True iff the members induce a complete subgraph. The empty set and
// singletons qualify. Throws UnknownVertexError for out-of-range members.
bool is_community(std::span<const Vertex> members,
                  const EffectiveEdgeGraph& eeg);

// All maximal cliques (Bron-Kerbosch with pivoting), isolated vertices as
// singletons. Members sorted, communities in lexicographic order.
std::vector<Community> enumerate_maximal_communities(
    const EffectiveEdgeGraph& eeg);

inline constexpr std::size_t kBruteForceVertexLimit = 20;

// Exhaustive subset search realizing the definition directly: every vertex
// subset that is a community and has no strictly larger community containing
// it. Same ordering as enumerate_maximal_communities. Throws TooLargeError
// above kBruteForceVertexLimit vertices.
std::vector<Community> brute_force_maximal_communities(
    const EffectiveEdgeGraph& eeg);

}  // namespace rsmc
