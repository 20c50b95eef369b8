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

#include "rsmc/similarity.hpp"

#include <cmath>
#include <cstdint>

#include "json.hpp"
#include "rsmc/errors.hpp"

namespace rsmc {

std::size_t CaseTable::case_index(std::string_view name) const {
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (cases[i] == name) return i;
  }
  return SIZE_MAX;
}

std::string_view to_string(SimilarityAxiom axiom) {
  switch (axiom) {
    case SimilarityAxiom::kNonNegativity:
      return "non-negativity";
    case SimilarityAxiom::kCoincidence:
      return "coincidence";
    case SimilarityAxiom::kSymmetry:
      return "symmetry";
    case SimilarityAxiom::kTriangle:
      return "triangle";
  }
  return "";
}

SimilarityTableReport validate_similarity_table(const CaseTable& table,
                                                double tol) {
  const Eigen::Index n = table.values.rows();
  if (table.values.cols() != n ||
      static_cast<std::size_t>(n) != table.cases.size()) {
    throw DimensionMismatchError("case table must be square over its cases");
  }
  SimilarityTableReport report;
  auto flag = [&](SimilarityAxiom axiom, bool& ok, std::size_t a,
                  std::size_t b, std::optional<std::size_t> via,
                  double magnitude) {
    ok = false;
    report.violations.push_back({axiom, a, b, via, magnitude});
  };

  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double x = table.values(i, j);
      const auto a = static_cast<std::size_t>(i);
      const auto b = static_cast<std::size_t>(j);
      if (!(x >= -tol) || !std::isfinite(x)) {
        flag(SimilarityAxiom::kNonNegativity, report.non_negative, a, b,
             std::nullopt, x);
      }
      if (i == j ? !(std::abs(x) <= tol) : !(x > tol)) {
        flag(SimilarityAxiom::kCoincidence, report.coincidence, a, b,
             std::nullopt, x);
      }
      if (i < j && !(std::abs(x - table.values(j, i)) <= tol)) {
        flag(SimilarityAxiom::kSymmetry, report.symmetric, a, b, std::nullopt,
             std::abs(x - table.values(j, i)));
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const double excess =
            table.values(i, j) - table.values(i, k) - table.values(k, j);
        if (excess > tol) {
          flag(SimilarityAxiom::kTriangle, report.triangle,
               static_cast<std::size_t>(i), static_cast<std::size_t>(j),
               static_cast<std::size_t>(k), excess);
        }
      }
    }
  }
  return report;
}

namespace {

using Json = nlohmann::ordered_json;

const Json& require(const Json& doc, const char* key, Json::value_t type) {
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw InvalidSpecError(std::string("missing \"") + key + "\"");
  }
  if (it->type() != type) {
    throw InvalidSpecError(std::string("\"") + key + "\" has the wrong type");
  }
  return *it;
}

}  // namespace

SimilaritySpec parse_similarity_spec(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw InvalidSpecError(std::string("similarity spec is not JSON: ") +
                           e.what());
  }
  if (!doc.is_object()) throw InvalidSpecError("spec must be a JSON object");

  SimilaritySpec spec;
  try {
    const Json& properties = require(doc, "properties", Json::value_t::array);
    const Json& cases = require(doc, "cases", Json::value_t::object);
    const Json& tables = require(doc, "tables", Json::value_t::object);
    const Json& weights = require(doc, "weights", Json::value_t::array);
    const Json& assignments =
        require(doc, "assignments", Json::value_t::object);

    for (const Json& p : properties) {
      spec.properties.push_back(p.get<std::string>());
    }
    if (weights.size() != spec.properties.size()) {
      throw InvalidSpecError("need one weight per property");
    }
    for (const Json& w : weights) spec.weights.push_back(w.get<double>());

    for (const std::string& p : spec.properties) {
      if (!cases.contains(p) || !tables.contains(p)) {
        throw InvalidSpecError("property '" + p + "' lacks cases or a table");
      }
      CaseTable table;
      table.cases = cases.at(p).get<std::vector<std::string>>();
      const auto rows = tables.at(p).get<std::vector<std::vector<double>>>();
      const auto n = static_cast<Eigen::Index>(table.cases.size());
      if (static_cast<Eigen::Index>(rows.size()) != n) {
        throw InvalidSpecError("table for '" + p + "' has " +
                               std::to_string(rows.size()) + " rows for " +
                               std::to_string(n) + " cases");
      }
      table.values.resize(n, n);
      for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != n) {
          throw InvalidSpecError("table for '" + p + "' is not square");
        }
        for (Eigen::Index j = 0; j < n; ++j) table.values(i, j) = rows[i][j];
      }
      spec.tables.push_back(std::move(table));
    }

    for (const auto& [label, per_property] : assignments.items()) {
      if (!per_property.is_object()) {
        throw InvalidSpecError("assignment for '" + label +
                               "' must be an object");
      }
      std::vector<std::size_t> row;
      for (std::size_t p = 0; p < spec.properties.size(); ++p) {
        const std::string& name = spec.properties[p];
        if (!per_property.contains(name)) {
          throw InvalidSpecError("vertex '" + label + "' has no case for '" +
                                 name + "'");
        }
        const auto value = per_property.at(name).get<std::string>();
        std::size_t idx = spec.tables[p].case_index(value);
        if (idx == SIZE_MAX) {
          throw InvalidSpecError("vertex '" + label + "' uses unknown case '" +
                                 value + "' of '" + name + "'");
        }
        row.push_back(idx);
      }
      spec.vertices.push_back(label);
      spec.assignments.push_back(std::move(row));
    }
  } catch (const Json::exception& e) {
    throw InvalidSpecError(std::string("malformed similarity spec: ") +
                           e.what());
  }
  return spec;
}

SimilarityNetwork combine_similarities(const SimilaritySpec& spec) {
  const std::size_t k = spec.properties.size();
  if (k == 0) throw InvalidSpecError("no properties");
  if (spec.tables.size() != k || spec.weights.size() != k) {
    throw InvalidSpecError("tables and weights must match the property list");
  }
  bool any_positive = false;
  for (double w : spec.weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw InvalidSpecError("weights must be finite and nonnegative");
    }
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw InvalidSpecError("at least one weight must be > 0");

  SimilarityNetwork out;
  for (std::size_t p = 0; p < k; ++p) {
    SimilarityTableReport report;
    try {
      report = validate_similarity_table(spec.tables[p]);
    } catch (const DimensionMismatchError& e) {
      throw InvalidSpecError("property '" + spec.properties[p] +
                             "': " + e.what());
    }
    if (!report.valid()) {
      throw InvalidSpecError("table for '" + spec.properties[p] +
                             "' is not a similarity function");
    }
    if (!report.triangle) out.non_metric_properties.push_back(spec.properties[p]);
  }

  const std::size_t n = spec.assignments.size();
  if (n == 0) throw InvalidSpecError("no vertices");
  for (const auto& row : spec.assignments) {
    if (row.size() != k) throw InvalidSpecError("incomplete assignment");
    for (std::size_t p = 0; p < k; ++p) {
      if (row[p] >= spec.tables[p].cases.size()) {
        throw InvalidSpecError("assignment case index out of range");
      }
    }
  }

  const auto nn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(nn, nn);
  for (std::size_t p = 0; p < k; ++p) {
    const double alpha = spec.weights[p];
    if (alpha == 0.0) continue;
    const Eigen::MatrixXd& s = spec.tables[p].values;
    for (Eigen::Index u = 0; u < nn; ++u) {
      const auto cu = static_cast<Eigen::Index>(spec.assignments[u][p]);
      for (Eigen::Index v = 0; v < nn; ++v) {
        const auto cv = static_cast<Eigen::Index>(spec.assignments[v][p]);
        f(u, v) += alpha * s(cu, cv);
      }
    }
  }
  for (Eigen::Index u = 0; u < nn; ++u) {
    for (Eigen::Index v = u + 1; v < nn; ++v) {
      if (f(u, v) == 0.0) {
        out.collapsed_pairs.emplace_back(static_cast<std::size_t>(u),
                                         static_cast<std::size_t>(v));
      }
    }
  }
  out.matrix = {std::move(f), RsmSource::kSimilarity};
  return out;
}

}  // namespace rsmc
