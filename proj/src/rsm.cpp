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

#include "rsmc/rsm.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>

#include "rsmc/errors.hpp"
#include "rsmc/laplacian.hpp"
#include "rsmc/number_format.hpp"
#include "rsmc/parallel.hpp"

namespace rsmc {

std::string_view to_string(RsmSource source) {
  switch (source) {
    case RsmSource::kSdf:
      return "sdf";
    case RsmSource::kErf:
      return "erf";
    case RsmSource::kSimilarity:
      return "similarity";
    case RsmSource::kExternal:
      return "external";
  }
  return "external";
}

RsmSource parse_rsm_source(std::string_view name) {
  if (name == "sdf") return RsmSource::kSdf;
  if (name == "erf") return RsmSource::kErf;
  if (name == "similarity") return RsmSource::kSimilarity;
  if (name == "external") return RsmSource::kExternal;
  throw InputError("unknown RSM '" + std::string(name) + "'");
}

RsmMatrix RsmMatrix::scaled(double alpha) const {
  RsmMatrix out{values * alpha, source};
  return out;
}

// ---------------------------------------------------------------------------
// Shortest distance

RsmMatrix sdf_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<Vertex, double>>> out_adj(n);
  for (const Edge& e : g.edges()) {
    out_adj[e.source].emplace_back(e.target, e.weight);
    if (!g.directed()) out_adj[e.target].emplace_back(e.source, e.weight);
  }

  const auto nn = static_cast<Eigen::Index>(n);
  // Row-major so each source writes one contiguous row.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> dist =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                    Eigen::RowMajor>::Constant(nn, nn, kInfinity);

  parallel_for(n, [&](std::size_t s) {
    double* row = dist.row(static_cast<Eigen::Index>(s)).data();
    using Item = std::pair<double, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
    row[s] = 0.0;
    frontier.emplace(0.0, s);
    while (!frontier.empty()) {
      auto [d, u] = frontier.top();
      frontier.pop();
      if (d > row[u]) continue;
      for (auto [v, w] : out_adj[u]) {
        double candidate = d + w;
        if (candidate < row[v]) {
          row[v] = candidate;
          frontier.emplace(candidate, v);
        }
      }
    }
  });

  Eigen::MatrixXd values(dist);
  if (!g.directed()) {
    // Path sums differ by round-off depending on direction.
    values.triangularView<Eigen::StrictlyLower>() = values.transpose();
  }
  return {std::move(values), RsmSource::kSdf};
}

// ---------------------------------------------------------------------------
// Effective resistance

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& members,
                       const std::vector<std::size_t>& local_index) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local_index[e.source] != SIZE_MAX &&
        local_index[e.target] != SIZE_MAX) {
      edges.push_back(
          {local_index[e.source], local_index[e.target], e.weight});
    }
  }
  return Graph(members.size(), std::move(edges), g.directed());
}

}  // namespace

Eigen::MatrixXd laplacian_pseudoinverse(const Graph& component) {
  if (component.directed()) {
    throw DirectedInputError("Laplacian pseudoinverse needs an undirected graph");
  }
  if (component.vertex_count() > 1 &&
      connected_components(component).component_count != 1) {
    throw SingularityError("graph is not connected; L + J/n is singular");
  }
  return connected_laplacian_pseudoinverse(laplacian<double>(component));
}

RsmMatrix erf_matrix(const Graph& g) {
  if (g.directed()) {
    throw DirectedInputError(
        "effective resistance is defined for undirected graphs only");
  }
  const std::size_t n = g.vertex_count();
  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd R = Eigen::MatrixXd::Constant(nn, nn, kInfinity);

  const auto groups = connected_components(g).members();
  std::vector<Eigen::MatrixXd> blocks(groups.size());
  parallel_for(groups.size(), [&](std::size_t c) {
    const auto& members = groups[c];
    std::vector<std::size_t> local(n, SIZE_MAX);
    for (std::size_t k = 0; k < members.size(); ++k) local[members[k]] = k;
    Graph sub = induced_subgraph(g, members, local);

    Eigen::MatrixXd L = laplacian<double>(sub);
    Eigen::MatrixXd pinv = connected_laplacian_pseudoinverse(L);
    const double scale = std::max(1.0, L.cwiseAbs().maxCoeff());
    const double residual = generalized_inverse_residual(L, pinv);
    if (!(residual <= kResidualTolerance * scale)) {
      throw NumericalError("Laplacian generalized-inverse residual " +
                           format_real(residual) + " exceeds tolerance");
    }
    blocks[c] = resistance_from_pseudoinverse(pinv);
  });

  for (std::size_t c = 0; c < groups.size(); ++c) {
    const auto& members = groups[c];
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = 0; b < members.size(); ++b) {
        R(static_cast<Eigen::Index>(members[a]),
          static_cast<Eigen::Index>(members[b])) =
            blocks[c](static_cast<Eigen::Index>(a),
                      static_cast<Eigen::Index>(b));
      }
    }
  }
  return {std::move(R), RsmSource::kErf};
}

// ---------------------------------------------------------------------------
// Axiom validation

bool RsmValidationReport::passed() const {
  for (PropertyStatus s : status) {
    if (s == PropertyStatus::kFail) return false;
  }
  return violation_count == 0;
}

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(double tol) {
    report_.tolerance = tol;
    report_.status.fill(PropertyStatus::kNotChecked);
  }

  void mark_checked(int property) {
    report_.status[property - 1] = PropertyStatus::kPass;
  }

  void add(int property, Vertex u, Vertex v, std::optional<Vertex> via,
           double magnitude) {
    report_.status[property - 1] = PropertyStatus::kFail;
    ++report_.violation_count;
    if (report_.violations.size() < RsmValidationReport::kMaxRecorded) {
      report_.violations.push_back({property, u, v, via, magnitude});
    }
  }

  RsmValidationReport take() { return std::move(report_); }

 private:
  RsmValidationReport report_;
};

// For every vertex w, the components of the undirected graph with w removed.
// cut[w][v] is the component id of v in g - w (SIZE_MAX for v == w).
std::vector<std::vector<std::size_t>> components_without_each_vertex(
    const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto adj = undirected_adjacency(g);
  std::vector<std::vector<std::size_t>> out(n,
                                            std::vector<std::size_t>(n, 0));
  std::vector<Vertex> stack;
  for (Vertex w = 0; w < n; ++w) {
    auto& comp = out[w];
    std::fill(comp.begin(), comp.end(), SIZE_MAX - 1);
    comp[w] = SIZE_MAX;
    std::size_t next_id = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (comp[s] != SIZE_MAX - 1) continue;
      comp[s] = next_id;
      stack.assign(1, s);
      while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (auto [v, weight] : adj[u]) {
          if (comp[v] == SIZE_MAX - 1) {
            comp[v] = next_id;
            stack.push_back(v);
          }
        }
      }
      ++next_id;
    }
  }
  return out;
}

void check_pointwise(const RsmMatrix& m, double tol, bool symmetric,
                     ReportBuilder& report) {
  const std::size_t n = m.size();
  report.mark_checked(1);
  report.mark_checked(2);
  if (symmetric) report.mark_checked(6);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      const double x = m(i, j);
      if (std::isnan(x) || x < -tol) report.add(1, i, j, std::nullopt, x);
      if (i == j) {
        if (!(std::abs(x) <= tol)) report.add(2, i, j, std::nullopt, x);
      } else if (!(x > tol)) {
        report.add(2, i, j, std::nullopt, x);
      }
      if (symmetric && i < j) {
        const double y = m(j, i);
        const bool same_inf = std::isinf(x) && std::isinf(y) && x == y;
        if (!same_inf && !(std::abs(x - y) <= tol)) {
          report.add(6, i, j, std::nullopt, std::abs(x - y));
        }
      }
    }
  }
}

void check_triangle(const RsmMatrix& m, double tol, ReportBuilder& report) {
  const std::size_t n = m.size();
  report.mark_checked(4);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = 0; w < n; ++w) {
      const double uw = m(u, w);
      if (!std::isfinite(uw)) continue;
      for (Vertex v = 0; v < n; ++v) {
        const double wv = m(w, v);
        if (!std::isfinite(wv)) continue;
        const double excess = m(u, v) - (uw + wv);
        if (excess > tol || std::isnan(excess)) report.add(4, u, v, w, excess);
      }
    }
  }
}

}  // namespace

RsmValidationReport validate_rsm(const RsmMatrix& m, const Graph& g,
                                 double tol) {
  const std::size_t n = g.vertex_count();
  if (m.values.rows() != m.values.cols() || m.size() != n) {
    throw DimensionMismatchError(
        "matrix is " + std::to_string(m.values.rows()) + "x" +
        std::to_string(m.values.cols()) + " but graph has " +
        std::to_string(n) + " vertices");
  }
  ReportBuilder report(tol);
  check_pointwise(m, tol, !g.directed(), report);

  report.mark_checked(3);
  const auto reach = reachability(g);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      const bool is_inf = m(i, j) == kInfinity;
      if (is_inf == reach[i][j]) report.add(3, i, j, std::nullopt, m(i, j));
    }
  }

  check_triangle(m, tol, report);

  // Equality through cut vertices: if removing w separates u from v (which
  // were connected), every u-v path passes through w.
  const auto components = connected_components(g);
  const auto without = components_without_each_vertex(g);
  for (Vertex w = 0; w < n; ++w) {
    const auto& comp = without[w];
    for (Vertex u = 0; u < n; ++u) {
      if (u == w) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (v == w || v == u) continue;
        if (components.assignment[u] != components.assignment[v]) continue;
        if (comp[u] == comp[v]) continue;
        const double lhs = m(u, v);
        const double rhs = m(u, w) + m(w, v);
        if (std::isinf(lhs) && std::isinf(rhs)) continue;
        const double gap = std::abs(lhs - rhs);
        if (!(gap <= tol)) report.add(4, u, v, w, gap);
      }
    }
  }
  return report.take();
}

RsmValidationReport validate_rsm(const RsmMatrix& m, double tol,
                                 bool symmetric) {
  if (m.values.rows() != m.values.cols()) {
    throw DimensionMismatchError("matrix is not square");
  }
  ReportBuilder report(tol);
  check_pointwise(m, tol, symmetric, report);
  report.mark_checked(3);
  const std::size_t n = m.size();
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (std::isinf(m(i, j))) report.add(3, i, j, std::nullopt, m(i, j));
    }
  }
  check_triangle(m, tol, report);
  return report.take();
}

bool check_scaling(const RsmMatrix& m, const RsmMatrix& m_scaled, double alpha,
                   double tol) {
  if (m.values.rows() != m_scaled.values.rows() ||
      m.values.cols() != m_scaled.values.cols()) {
    throw DimensionMismatchError("scaling check needs equally sized matrices");
  }
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) {
      const double a = m.values(i, j);
      const double b = m_scaled.values(i, j);
      if (std::isinf(a) || std::isinf(b)) {
        if (a != b) return false;
        continue;
      }
      if (!(std::abs(b - alpha * a) <= tol)) return false;
    }
  }
  return true;
}

}  // namespace rsmc
