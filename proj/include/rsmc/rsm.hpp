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

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsmc/graph.hpp"

namespace rsmc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Defaults for linear-algebra residuals and for axiom checks.
inline constexpr double kResidualTolerance = 1e-9;
inline constexpr double kAxiomTolerance = 1e-8;

enum class RsmSource { kSdf, kErf, kSimilarity, kExternal };

std::string_view to_string(RsmSource source);

// Accepts "sdf", "erf", "similarity", "external"; throws InputError otherwise.
RsmSource parse_rsm_source(std::string_view name);

// Relation strength measurement over every ordered vertex pair: the weights
// of the adjoint complete digraph. Entries are >= 0 with a zero diagonal;
// +inf (IEEE infinity, never a large finite stand-in) marks pairs with no
// connecting path.
struct RsmMatrix {
  Eigen::MatrixXd values;
  RsmSource source = RsmSource::kExternal;

  std::size_t size() const { return static_cast<std::size_t>(values.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  // Entrywise alpha * values; +inf stays +inf.
  RsmMatrix scaled(double alpha) const;
};

// Shortest-path distance (sum of weights) along directed edges; undirected
// edges are traversable both ways. One Dijkstra run per source.
RsmMatrix sdf_matrix(const Graph& g);

// Effective resistance between every pair, each edge being a resistor of its
// weight. Computed per connected component from the Laplacian generalized
// inverse; cross-component entries are +inf. Throws DirectedInputError for
// directed graphs and NumericalError if the generalized-inverse residual
// exceeds tolerance.
RsmMatrix erf_matrix(const Graph& g);

// L+ for a connected undirected graph (see laplacian.hpp for the method).
Eigen::MatrixXd laplacian_pseudoinverse(const Graph& component);

enum class PropertyStatus { kPass, kFail, kNotChecked };

struct AxiomViolation {
  int property = 0;  // 1..6
  Vertex u = 0;
  Vertex v = 0;
  std::optional<Vertex> via;  // intermediate vertex for property 4
  double magnitude = 0.0;
};

struct RsmValidationReport {
  // Index k holds property k+1: non-negativity, coincidence, infinity iff no
  // path, triangle inequality (with cut-vertex equality), alpha-scaling,
  // symmetry.
  std::array<PropertyStatus, 6> status{};
  std::vector<AxiomViolation> violations;  // capped at kMaxRecorded
  std::size_t violation_count = 0;         // uncapped
  double tolerance = 0.0;

  static constexpr std::size_t kMaxRecorded = 1000;

  PropertyStatus property(int k) const { return status.at(k - 1); }
  bool passed() const;
};

// Checks properties 1-4 (and 6 when g is undirected) of m against g. For
// directed graphs the +inf pattern must match directed reachability.
// Throws DimensionMismatchError when sizes differ.
RsmValidationReport validate_rsm(const RsmMatrix& m, const Graph& g,
                                 double tol = kAxiomTolerance);

// Graph-free variant for matrices such as similarity networks: treats m as
// defined over a complete graph, so no entry may be +inf and no vertex is a
// cut vertex. Symmetry is checked when `symmetric` is set.
RsmValidationReport validate_rsm(const RsmMatrix& m, double tol,
                                 bool symmetric);

// True iff the +inf patterns agree and every finite entry satisfies
// |scaled - alpha * m| <= tol.
bool check_scaling(const RsmMatrix& m, const RsmMatrix& m_scaled, double alpha,
                   double tol = kAxiomTolerance);

}  // namespace rsmc
