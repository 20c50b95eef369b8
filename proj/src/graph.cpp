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

#include "rsmc/graph.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "rsmc/errors.hpp"
#include "rsmc/number_format.hpp"

namespace rsmc {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges, bool directed,
             std::vector<std::string> labels)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      directed_(directed),
      labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count_) {
    throw InputError("label table has " + std::to_string(labels_.size()) +
                     " entries for " + std::to_string(vertex_count_) +
                     " vertices");
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  for (Edge& e : edges_) {
    if (e.source >= vertex_count_ || e.target >= vertex_count_) {
      throw InputError("edge endpoint out of range");
    }
    if (e.source == e.target) {
      throw InputError("self-loop on vertex " + label(e.source));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw WeightError("edge " + label(e.source) + " - " + label(e.target) +
                        " has weight " + format_real(e.weight) +
                        "; weights must be finite and > 0");
    }
    if (!directed_ && e.source > e.target) std::swap(e.source, e.target);
    if (!seen.emplace(e.source, e.target).second) {
      throw DuplicateEdgeError("duplicate edge " + label(e.source) + " - " +
                               label(e.target));
    }
  }
}

std::string Graph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::scaled(double alpha) const {
  std::vector<Edge> edges = edges_;
  for (Edge& e : edges) e.weight *= alpha;
  return Graph(vertex_count_, std::move(edges), directed_, labels_);
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text, bool directed) {
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::size_t loops = 0;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = index.emplace(std::string(token), labels.size());
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    auto fields = split_fields(line);
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(line_no, "expected 2 or 3 tab-separated fields, got " +
                                    std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(line_no, "empty vertex token");
    }
    double weight = 1.0;
    if (fields.size() == 3) {
      auto w = parse_real(fields[2]);
      if (!w) {
        throw ParseError(line_no,
                         "bad weight '" + std::string(fields[2]) + "'");
      }
      weight = *w;
    }
    if (weight < 0.0) {
      throw WeightError("line " + std::to_string(line_no) +
                        ": negative weight " + format_real(weight));
    }

    Vertex u = intern(fields[0]);
    Vertex v = intern(fields[1]);
    if (u == v) {
      ++loops;
      continue;
    }
    if (weight == 0.0 || !std::isfinite(weight)) {
      throw WeightError("line " + std::to_string(line_no) + ": weight " +
                        format_real(weight) +
                        " is only allowed on self-loops");
    }
    auto key = directed ? std::pair{u, v} : std::pair{std::min(u, v),
                                                      std::max(u, v)};
    if (!seen.insert(key).second) {
      throw DuplicateEdgeError("line " + std::to_string(line_no) +
                               ": duplicate edge " + std::string(fields[0]) +
                               " - " + std::string(fields[1]));
    }
    edges.push_back({u, v, weight});
  }

  std::size_t n = labels.size();
  return {Graph(n, std::move(edges), directed, std::move(labels)), loops};
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  for (const Edge& e : g.edges()) {
    out << g.label(e.source) << '\t' << g.label(e.target) << '\t'
        << format_real(e.weight) << '\n';
  }
  return out.str();
}

std::vector<std::vector<Vertex>> ComponentPartition::members() const {
  std::vector<std::vector<Vertex>> out(component_count);
  for (Vertex v = 0; v < assignment.size(); ++v) {
    out[assignment[v]].push_back(v);
  }
  return out;
}

ComponentPartition connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    std::size_t a = find(e.source);
    std::size_t b = find(e.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  ComponentPartition out;
  out.assignment.assign(n, 0);
  std::vector<std::size_t> id_of_root(n, n);
  for (Vertex v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (id_of_root[r] == n) id_of_root[r] = out.component_count++;
    out.assignment[v] = id_of_root[r];
  }
  return out;
}

std::vector<std::vector<bool>> reachability(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Vertex>> out_adj(n);
  for (const Edge& e : g.edges()) {
    out_adj[e.source].push_back(e.target);
    if (!g.directed()) out_adj[e.target].push_back(e.source);
  }
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    auto& row = reach[s];
    row[s] = true;
    stack.assign(1, s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : out_adj[u]) {
        if (!row[v]) {
          row[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return reach;
}

std::vector<std::vector<std::pair<Vertex, double>>> undirected_adjacency(
    const Graph& g) {
  std::vector<std::vector<std::pair<Vertex, double>>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.source].emplace_back(e.target, e.weight);
    adj[e.target].emplace_back(e.source, e.weight);
  }
  return adj;
}

}  // namespace rsmc
