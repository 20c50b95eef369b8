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

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsmc/rsm.hpp"

namespace rsmc {

// Dissimilarity between the cases of one property: larger means less alike.
struct CaseTable {
  std::vector<std::string> cases;
  Eigen::MatrixXd values;

  std::size_t case_index(std::string_view name) const;  // SIZE_MAX if absent
};

enum class SimilarityAxiom { kNonNegativity, kCoincidence, kSymmetry, kTriangle };

std::string_view to_string(SimilarityAxiom axiom);

struct CaseViolation {
  SimilarityAxiom axiom;
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<std::size_t> via;  // triangle only
  double magnitude = 0.0;
};

struct SimilarityTableReport {
  bool non_negative = true;
  bool coincidence = true;
  bool symmetric = true;
  // Not a similarity-function axiom, but the combined measure only obeys the
  // triangle inequality when every table does.
  bool triangle = true;
  std::vector<CaseViolation> violations;

  // The three similarity-function axioms.
  bool valid() const { return non_negative && coincidence && symmetric; }
};

// Throws DimensionMismatchError when the table is not square or does not
// match its case list.
SimilarityTableReport validate_similarity_table(const CaseTable& table,
                                                double tol = 0.0);

struct SimilaritySpec {
  std::vector<std::string> properties;
  std::vector<CaseTable> tables;        // parallel to properties
  std::vector<double> weights;          // parallel to properties
  std::vector<std::string> vertices;    // vertex labels, index order
  // assignments[v][p]: case index of vertex v for property p.
  std::vector<std::vector<std::size_t>> assignments;
};

// Reads the JSON document
//   {"properties": [...], "cases": {P: [...]}, "tables": {P: [[...]]},
//    "weights": [...], "assignments": {label: {P: case}}}
// Vertices are indexed in document order of "assignments". Throws
// InvalidSpecError on structural problems.
SimilaritySpec parse_similarity_spec(std::string_view json_text);

struct SimilarityNetwork {
  RsmMatrix matrix;  // tagged RsmSource::kSimilarity
  // Properties whose table breaks the triangle inequality.
  std::vector<std::string> non_metric_properties;
  // Distinct vertices at distance zero (zero weights or duplicate cases).
  std::vector<std::pair<std::size_t, std::size_t>> collapsed_pairs;
};

// values[u][v] = sum_i weights[i] * table_i(case_i(u), case_i(v)).
// Throws InvalidSpecError if a table fails an axiom, a weight is negative,
// all weights are zero, or an assignment is missing or out of range.
SimilarityNetwork combine_similarities(const SimilaritySpec& spec);

}  // namespace rsmc
