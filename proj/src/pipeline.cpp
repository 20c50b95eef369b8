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

#include "rsmc/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rsmc/datasets.hpp"
#include "rsmc/errors.hpp"
#include "rsmc/io.hpp"
#include "rsmc/number_format.hpp"
#include "rsmc/similarity.hpp"

namespace rsmc {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "dot") return OutputFormat::kDot;
  if (name == "csv") return OutputFormat::kCsv;
  throw InputError("unknown output format '" + std::string(name) + "'");
}

void PipelineConfig::validate() const {
  const int rsm_sources = (rsm ? 1 : 0) + (similarity_spec_path ? 1 : 0) +
                          (matrix_path ? 1 : 0);
  if (rsm_sources != 1) {
    throw InputError(
        "specify exactly one of --rsm, --similarity-spec, --matrix");
  }
  if (input_path && builtin) {
    throw InputError("--input and --builtin are mutually exclusive");
  }
  if (rsm) {
    if (*rsm != RsmSource::kSdf && *rsm != RsmSource::kErf) {
      throw InputError("--rsm must be sdf or erf");
    }
    if (!input_path && !builtin) {
      throw InputError("--rsm needs a graph from --input or --builtin");
    }
  }
  if (std::isnan(epsilon) || epsilon < 0.0) {
    throw NegativeEpsilonError("epsilon must be >= 0");
  }
  if (std::isnan(tolerance) || tolerance < 0.0) {
    throw InputError("tolerance must be >= 0");
  }
}

RsmInput load_rsm_input(const PipelineConfig& cfg) {
  RsmInput input;
  if (cfg.builtin) {
    input.graph = load_builtin_dataset(*cfg.builtin);
  } else if (cfg.input_path) {
    input.graph = parse_edge_list(read_file(*cfg.input_path), cfg.directed).graph;
  }

  if (cfg.rsm) {
    input.matrix = *cfg.rsm == RsmSource::kErf ? erf_matrix(*input.graph)
                                               : sdf_matrix(*input.graph);
    input.labels = input.graph->labels();
  } else if (cfg.similarity_spec_path) {
    auto spec = parse_similarity_spec(read_file(*cfg.similarity_spec_path));
    input.matrix = combine_similarities(spec).matrix;
    input.labels = spec.vertices;
  } else {
    input.matrix = load_matrix(read_file(*cfg.matrix_path));
    if (input.graph) {
      if (input.graph->vertex_count() != input.matrix.size()) {
        throw DimensionMismatchError("matrix size does not match the graph");
      }
      input.labels = input.graph->labels();
    }
  }
  return input;
}

DetectionResult detect_communities(RsmInput input, double epsilon,
                                   double tolerance) {
  const auto start = std::chrono::steady_clock::now();
  EffectiveEdgeGraph eeg = refine(input.matrix, epsilon, tolerance);
  DetectionResult result;
  result.communities = enumerate_maximal_communities(eeg);
  result.metadata.rsm = input.matrix.source;
  result.metadata.epsilon = epsilon;
  result.metadata.tolerance = tolerance;
  result.metadata.vertex_count = input.matrix.size();
  result.metadata.edge_count = input.graph ? input.graph->edge_count() : 0;
  result.metadata.effective_edge_count = eeg.edge_count();
  result.metadata.community_count = result.communities.size();
  result.labels = std::move(input.labels);
  result.graph = std::move(input.graph);
  result.metadata.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

DetectionResult run_pipeline(const PipelineConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  DetectionResult result =
      detect_communities(load_rsm_input(cfg), cfg.epsilon, cfg.tolerance);
  result.metadata.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

std::string render(const DetectionResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return communities_to_json(result.communities, result.metadata.epsilon,
                                 result.metadata.rsm, result.labels);
    case OutputFormat::kCsv:
      return communities_to_csv(result.communities, result.labels);
    case OutputFormat::kDot:
      return communities_to_dot(result.communities,
                                result.metadata.vertex_count, result.labels,
                                result.graph ? &*result.graph : nullptr);
  }
  return {};
}

SweepRange parse_sweep_range(std::string_view text) {
  SweepRange range;
  double* fields[] = {&range.lo, &range.hi, &range.step};
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    std::size_t colon = text.find(':', start);
    if ((k < 2) == (colon == std::string_view::npos)) {
      throw InputError("epsilon sweep must look like lo:hi:step");
    }
    auto value = parse_real(text.substr(start, colon - start));
    if (!value || !std::isfinite(*value)) {
      throw InputError("bad number in epsilon sweep '" + std::string(text) +
                       "'");
    }
    *fields[k] = *value;
    start = colon + 1;
  }
  if (range.lo < 0.0 || range.hi < range.lo || !(range.step > 0.0)) {
    throw InputError("epsilon sweep needs 0 <= lo <= hi and step > 0");
  }
  return range;
}

std::vector<SweepRow> epsilon_sweep(const RsmMatrix& m, const SweepRange& range,
                                    double tolerance) {
  // Count steps up front so round-off cannot drop or add the last value.
  const auto steps = static_cast<std::size_t>(
      std::floor((range.hi - range.lo) / range.step + 1e-9));
  std::vector<SweepRow> rows;
  rows.reserve(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    const double eps = range.lo + static_cast<double>(k) * range.step;
    EffectiveEdgeGraph eeg = refine(m, eps, tolerance);
    rows.push_back(
        {eps, enumerate_maximal_communities(eeg).size(), eeg.edge_count()});
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "epsilon,community_count,effective_edge_count\n";
  for (const SweepRow& r : rows) {
    out += format_real(r.epsilon) + "," + std::to_string(r.community_count) +
           "," + std::to_string(r.effective_edge_count) + "\n";
  }
  return out;
}

}  // namespace rsmc
