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

#include <string>
#include <string_view>
#include <vector>

#include "rsmc/community.hpp"
#include "rsmc/graph.hpp"
#include "rsmc/rsm.hpp"
#include "rsmc/similarity.hpp"

namespace rsmc {

// Row-major CSV, one row per line, "inf" for +inf.
std::string matrix_to_csv(const RsmMatrix& m);
// Nested arrays; +inf written as the string "inf".
std::string matrix_to_json(const RsmMatrix& m);

// Both loaders return matrices tagged RsmSource::kExternal and throw
// ParseError (CSV) / InputError (JSON) on malformed or non-square input.
RsmMatrix matrix_from_csv(std::string_view text);
RsmMatrix matrix_from_json(std::string_view text);

// Picks the loader from the first non-blank character ('[' means JSON).
RsmMatrix load_matrix(std::string_view text);

// {"epsilon": x, "rsm": tag, "communities": [[labels...], ...]}
// `labels` maps vertex indices to names; when empty, indices are printed.
std::string communities_to_json(const std::vector<Community>& communities,
                                double epsilon, RsmSource rsm,
                                const std::vector<std::string>& labels);

// "community,vertex" rows, community ids 0-based in list order.
std::string communities_to_csv(const std::vector<Community>& communities,
                               const std::vector<std::string>& labels);

// Graphviz rendering of `g` (or bare vertices when `g` is null) with each
// vertex filled by the colors of the communities it belongs to; vertices in
// several communities are drawn as wedges.
std::string communities_to_dot(const std::vector<Community>& communities,
                               std::size_t vertex_count,
                               const std::vector<std::string>& labels,
                               const Graph* g);

std::string validation_report_to_json(const RsmValidationReport& report);
std::string similarity_report_to_json(
    const std::vector<std::string>& properties,
    const std::vector<SimilarityTableReport>& reports);

}  // namespace rsmc
