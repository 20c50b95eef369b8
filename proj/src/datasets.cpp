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

#include "rsmc/datasets.hpp"

#include <string>
#include <utility>

#include "rsmc/errors.hpp"
#include "rsmc/karate_data.hpp"

namespace rsmc {

std::vector<std::string> builtin_dataset_names() { return {"karate"}; }

Graph load_builtin_dataset(std::string_view name) {
  if (name != "karate") {
    throw UnknownDatasetError("unknown dataset '" + std::string(name) +
                              "'; available: karate");
  }
  // Re-index so that vertex i is member i+1, independent of the order in
  // which members first appear in the fixture.
  const Graph parsed = parse_edge_list(detail::kKarateEdgeList, false).graph;
  const std::size_t n = parsed.vertex_count();
  std::vector<Vertex> index_of(n);
  for (Vertex v = 0; v < n; ++v) {
    index_of[v] = static_cast<Vertex>(std::stoul(parsed.label(v)) - 1);
  }
  std::vector<Edge> edges;
  edges.reserve(parsed.edge_count());
  for (const Edge& e : parsed.edges()) {
    edges.push_back({index_of[e.source], index_of[e.target], e.weight});
  }
  std::vector<std::string> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[v] = std::to_string(v + 1);
  return Graph(n, std::move(edges), false, std::move(labels));
}

}  // namespace rsmc
