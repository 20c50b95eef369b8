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

#include "rsmc/community.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "rsmc/errors.hpp"

namespace rsmc {

EffectiveEdgeGraph::EffectiveEdgeGraph(
    std::size_t vertex_count, std::span<const std::pair<Vertex, Vertex>> edges,
    double epsilon, RsmSource rsm)
    : n_(vertex_count),
      epsilon_(epsilon),
      rsm_(rsm),
      adj_(vertex_count * vertex_count, 0),
      nbrs_(vertex_count) {
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("effective edge graph has no self-pairs");
    if (adj_[u * n_ + v]) continue;
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
    nbrs_[u].push_back(v);
    nbrs_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

std::vector<std::pair<Vertex, Vertex>> EffectiveEdgeGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : nbrs_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

EffectiveEdgeGraph refine(const RsmMatrix& m, double epsilon, double tol) {
  if (std::isnan(epsilon) || epsilon < 0.0) {
    throw NegativeEpsilonError("community parameter must be >= 0");
  }
  if (std::isnan(tol) || tol < 0.0) {
    throw InputError("comparison tolerance must be >= 0");
  }
  if (m.values.rows() != m.values.cols()) {
    throw DimensionMismatchError("RSM matrix is not square");
  }
  const std::size_t n = m.size();
  const double bound = epsilon + tol;
  auto within = [bound](double x) { return std::isfinite(x) && x <= bound; };

  std::vector<std::pair<Vertex, Vertex>> kept;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (within(m(u, v)) && within(m(v, u))) kept.emplace_back(u, v);
    }
  }
  return EffectiveEdgeGraph(n, kept, epsilon, m.source);
}

bool is_community(std::span<const Vertex> members,
                  const EffectiveEdgeGraph& eeg) {
  for (Vertex v : members) {
    if (v >= eeg.vertex_count()) {
      throw UnknownVertexError("vertex " + std::to_string(v) +
                               " is not in the effective edge graph");
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i] != members[j] && !eeg.adjacent(members[i], members[j])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

void canonicalize(std::vector<Community>& communities) {
  for (auto& c : communities) std::sort(c.members.begin(), c.members.end());
  std::sort(communities.begin(), communities.end(),
            [](const Community& a, const Community& b) {
              return a.members < b.members;
            });
}

class BronKerbosch {
 public:
  explicit BronKerbosch(const EffectiveEdgeGraph& eeg) : eeg_(eeg) {}

  void expand(std::vector<Vertex>& clique, const std::vector<Vertex>& cand,
              const std::vector<Vertex>& excluded) {
    if (cand.empty()) {
      if (excluded.empty()) found_.push_back(clique);
      return;
    }
    const Vertex pivot = choose_pivot(cand, excluded);
    std::vector<Vertex> p = cand;
    std::vector<Vertex> x = excluded;
    for (Vertex v : cand) {
      if (eeg_.adjacent(pivot, v)) continue;
      std::vector<Vertex> next_p;
      std::vector<Vertex> next_x;
      for (Vertex w : p) {
        if (eeg_.adjacent(v, w)) next_p.push_back(w);
      }
      for (Vertex w : x) {
        if (eeg_.adjacent(v, w)) next_x.push_back(w);
      }
      clique.push_back(v);
      expand(clique, next_p, next_x);
      clique.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::upper_bound(x.begin(), x.end(), v), v);
    }
  }

  std::vector<std::vector<Vertex>>& found() { return found_; }

 private:
  // Vertex of cand ∪ excluded with the most neighbors in cand.
  Vertex choose_pivot(const std::vector<Vertex>& cand,
                      const std::vector<Vertex>& excluded) const {
    Vertex best = cand.front();
    std::size_t best_score = 0;
    bool first = true;
    auto consider = [&](Vertex u) {
      std::size_t score = 0;
      for (Vertex w : cand) score += eeg_.adjacent(u, w) ? 1 : 0;
      if (first || score > best_score) {
        best = u;
        best_score = score;
        first = false;
      }
    };
    for (Vertex u : cand) consider(u);
    for (Vertex u : excluded) consider(u);
    return best;
  }

  const EffectiveEdgeGraph& eeg_;
  std::vector<std::vector<Vertex>> found_;
};

// Smallest-last (degeneracy) vertex order.
std::vector<Vertex> degeneracy_order(const EffectiveEdgeGraph& eeg) {
  const std::size_t n = eeg.vertex_count();
  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = eeg.neighbors(v).size();
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<std::vector<Vertex>> buckets(max_degree + 1);
  for (Vertex v = n; v-- > 0;) buckets[degree[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  std::size_t d = 0;
  while (order.size() < n) {
    d = 0;
    while (buckets[d].empty()) ++d;
    Vertex v = buckets[d].back();
    buckets[d].pop_back();
    if (removed[v] || degree[v] != d) continue;
    removed[v] = 1;
    order.push_back(v);
    for (Vertex w : eeg.neighbors(v)) {
      if (!removed[w]) buckets[--degree[w]].push_back(w);
    }
  }
  return order;
}

constexpr std::size_t kDegeneracyThreshold = 1000;

}  // namespace

std::vector<Community> enumerate_maximal_communities(
    const EffectiveEdgeGraph& eeg) {
  const std::size_t n = eeg.vertex_count();
  BronKerbosch bk(eeg);
  std::vector<Vertex> clique;

  if (n > kDegeneracyThreshold) {
    const auto order = degeneracy_order(eeg);
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
    for (Vertex v : order) {
      std::vector<Vertex> p;
      std::vector<Vertex> x;
      for (Vertex w : eeg.neighbors(v)) {
        (position[w] > position[v] ? p : x).push_back(w);
      }
      clique.assign(1, v);
      bk.expand(clique, p, x);
    }
  } else {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    bk.expand(clique, all, {});
  }

  std::vector<Community> out;
  out.reserve(bk.found().size());
  for (auto& members : bk.found()) {
    out.push_back({std::move(members), true, eeg.epsilon(), eeg.rsm()});
  }
  canonicalize(out);
  return out;
}

std::vector<Community> brute_force_maximal_communities(
    const EffectiveEdgeGraph& eeg) {
  const std::size_t n = eeg.vertex_count();
  if (n > kBruteForceVertexLimit) {
    throw TooLargeError("exhaustive search is limited to " +
                        std::to_string(kBruteForceVertexLimit) +
                        " vertices, got " + std::to_string(n));
  }
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> neighborhood(n, 0);
  for (auto [u, v] : eeg.edges()) {
    neighborhood[u] |= std::uint32_t{1} << v;
    neighborhood[v] |= std::uint32_t{1} << u;
  }

  // complete[S]: S induces a complete subgraph.
  std::vector<char> complete(std::size_t{full} + 1, 0);
  complete[0] = 1;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    const int low = __builtin_ctz(s);
    const std::uint32_t rest = s & (s - 1);
    complete[s] = complete[rest] && (rest & ~neighborhood[low]) == 0;
  }

  // larger[S]: some strict superset of S is complete.
  std::vector<char> larger(std::size_t{full} + 1, 0);
  std::vector<Community> out;
  for (std::uint32_t s = full + 1; s-- > 0;) {
    for (std::size_t v = 0; v < n && !larger[s]; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (s & bit) continue;
      larger[s] = complete[s | bit] || larger[s | bit];
    }
    if (s != 0 && complete[s] && !larger[s]) {
      Community c;
      for (std::size_t v = 0; v < n; ++v) {
        if (s & (std::uint32_t{1} << v)) c.members.push_back(v);
      }
      c.maximal = true;
      c.epsilon = eeg.epsilon();
      c.rsm = eeg.rsm();
      out.push_back(std::move(c));
    }
  }
  canonicalize(out);
  return out;
}

}  // namespace rsmc
