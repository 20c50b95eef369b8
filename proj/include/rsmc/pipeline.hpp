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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rsmc/community.hpp"
#include "rsmc/graph.hpp"
#include "rsmc/rsm.hpp"

namespace rsmc {

enum class OutputFormat { kJson, kDot, kCsv };

OutputFormat parse_output_format(std::string_view name);

struct PipelineConfig {
  // Graph source: at most one of these.
  std::optional<std::string> input_path;
  std::optional<std::string> builtin;
  bool directed = false;

  // RSM source: exactly one of these.
  std::optional<RsmSource> rsm;  // sdf or erf, computed from the graph
  std::optional<std::string> similarity_spec_path;
  std::optional<std::string> matrix_path;

  double epsilon = 0.0;
  double tolerance = kDefaultCompareTolerance;
  OutputFormat format = OutputFormat::kJson;
  std::optional<std::string> output_path;

  // Throws InputError when the invariants above do not hold.
  void validate() const;
};

// The RSM stage of the pipeline: the source graph (if any), the matrix, and
// vertex names.
struct RsmInput {
  std::optional<Graph> graph;
  RsmMatrix matrix;
  std::vector<std::string> labels;
};

RsmInput load_rsm_input(const PipelineConfig& cfg);

struct DetectionMetadata {
  RsmSource rsm = RsmSource::kExternal;
  double epsilon = 0.0;
  double tolerance = 0.0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;            // source graph; 0 without a graph
  std::size_t effective_edge_count = 0;
  std::size_t community_count = 0;
  double wall_seconds = 0.0;
};

struct DetectionResult {
  std::vector<Community> communities;
  std::vector<std::string> labels;
  std::optional<Graph> graph;
  DetectionMetadata metadata;
};

// Refines and enumerates an already built RSM.
DetectionResult detect_communities(RsmInput input, double epsilon,
                                   double tolerance);

// Graph -> RSM -> refinement -> maximal communities.
DetectionResult run_pipeline(const PipelineConfig& cfg);

// Output document in the requested format. Deterministic: wall time is not
// part of it.
std::string render(const DetectionResult& result, OutputFormat format);

struct SweepRow {
  double epsilon = 0.0;
  std::size_t community_count = 0;
  std::size_t effective_edge_count = 0;
};

// Parses "lo:hi:step" (0 <= lo <= hi, step > 0).
struct SweepRange {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
};
SweepRange parse_sweep_range(std::string_view text);

std::vector<SweepRow> epsilon_sweep(const RsmMatrix& m, const SweepRange& range,
                                    double tolerance);
std::string sweep_to_csv(const std::vector<SweepRow>& rows);

}  // namespace rsmc
