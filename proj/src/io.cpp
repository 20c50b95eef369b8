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

#include "rsmc/io.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "rsmc/errors.hpp"
#include "rsmc/number_format.hpp"

namespace rsmc {

namespace {

using Json = nlohmann::ordered_json;

Json real_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

std::string name_of(const std::vector<std::string>& labels, Vertex v) {
  return labels.empty() ? std::to_string(v) : labels.at(v);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

RsmMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  RsmMatrix m{Eigen::MatrixXd(n, n), RsmSource::kExternal};
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) m.values(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace

std::string matrix_to_csv(const RsmMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_real(m.values(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_json(const RsmMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) {
      row.push_back(real_to_json(m.values(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return rows.dump() + "\n";
}

RsmMatrix matrix_from_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      auto token = trim(line.substr(start, comma - start));
      auto value = parse_real(token);
      if (!value) {
        throw ParseError(line_no, "bad matrix entry '" + std::string(token) + "'");
      }
      row.push_back(*value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(line_no, "ragged matrix row");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(line_no, "empty matrix");
  if (rows.size() != rows.front().size()) {
    throw DimensionMismatchError("matrix is " + std::to_string(rows.size()) +
                                 "x" + std::to_string(rows.front().size()) +
                                 ", expected square");
  }
  return from_rows(rows);
}

RsmMatrix matrix_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("matrix is not valid JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty()) {
    throw InputError("matrix JSON must be a nonempty array of rows");
  }
  std::vector<std::vector<double>> rows;
  for (const Json& row : doc) {
    if (!row.is_array() || row.size() != doc.size()) {
      throw DimensionMismatchError("matrix JSON must be square");
    }
    std::vector<double> values;
    for (const Json& cell : row) {
      if (cell.is_number()) {
        values.push_back(cell.get<double>());
      } else if (cell.is_string()) {
        auto v = parse_real(cell.get<std::string>());
        if (!v) throw InputError("bad matrix entry " + cell.dump());
        values.push_back(*v);
      } else {
        throw InputError("bad matrix entry " + cell.dump());
      }
    }
    rows.push_back(std::move(values));
  }
  return from_rows(rows);
}

RsmMatrix load_matrix(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    return matrix_from_json(text);
  }
  return matrix_from_csv(text);
}

std::string communities_to_json(const std::vector<Community>& communities,
                                double epsilon, RsmSource rsm,
                                const std::vector<std::string>& labels) {
  Json doc;
  doc["epsilon"] = real_to_json(epsilon);
  doc["rsm"] = std::string(to_string(rsm));
  Json list = Json::array();
  for (const Community& c : communities) {
    Json members = Json::array();
    for (Vertex v : c.members) members.push_back(name_of(labels, v));
    list.push_back(std::move(members));
  }
  doc["communities"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string communities_to_csv(const std::vector<Community>& communities,
                               const std::vector<std::string>& labels) {
  std::string out = "community,vertex\n";
  for (std::size_t c = 0; c < communities.size(); ++c) {
    for (Vertex v : communities[c].members) {
      out += std::to_string(c) + "," + name_of(labels, v) + "\n";
    }
  }
  return out;
}

std::string communities_to_dot(const std::vector<Community>& communities,
                               std::size_t vertex_count,
                               const std::vector<std::string>& labels,
                               const Graph* g) {
  static constexpr std::array<const char*, 10> kPalette = {
      "red",    "blue",  "yellow", "green",  "orange",
      "purple", "cyan",  "brown",  "pink",   "gray"};
  std::vector<std::vector<std::size_t>> membership(vertex_count);
  for (std::size_t c = 0; c < communities.size(); ++c) {
    for (Vertex v : communities[c].members) membership.at(v).push_back(c);
  }

  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };

  std::ostringstream out;
  const bool directed = g != nullptr && g->directed();
  out << (directed ? "digraph" : "graph") << " communities {\n";
  out << "  node [style=filled];\n";
  for (Vertex v = 0; v < vertex_count; ++v) {
    out << "  " << v << " [label=" << quoted(name_of(labels, v));
    const auto& in = membership[v];
    std::string colors;
    for (std::size_t k = 0; k < in.size(); ++k) {
      if (k > 0) colors += ':';
      colors += kPalette[in[k] % kPalette.size()];
    }
    if (in.size() > 1) {
      out << ", style=wedged, fillcolor=" << quoted(colors);
    } else if (in.size() == 1) {
      out << ", fillcolor=" << quoted(colors);
    }
    std::string ids;
    for (std::size_t k = 0; k < in.size(); ++k) {
      if (k > 0) ids += ',';
      ids += std::to_string(in[k]);
    }
    out << ", communities=" << quoted(ids) << "];\n";
  }
  if (g != nullptr) {
    const char* arrow = directed ? " -> " : " -- ";
    for (const Edge& e : g->edges()) {
      out << "  " << e.source << arrow << e.target << " [weight="
          << format_real(e.weight) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string validation_report_to_json(const RsmValidationReport& report) {
  static constexpr std::array<const char*, 6> kNames = {
      "non_negativity", "coincidence", "infinity_iff_no_path",
      "triangle_inequality", "scaling", "symmetry"};
  Json doc;
  doc["passed"] = report.passed();
  doc["tolerance"] = report.tolerance;
  Json props = Json::object();
  for (std::size_t k = 0; k < kNames.size(); ++k) {
    switch (report.status[k]) {
      case PropertyStatus::kPass:
        props[kNames[k]] = "pass";
        break;
      case PropertyStatus::kFail:
        props[kNames[k]] = "fail";
        break;
      case PropertyStatus::kNotChecked:
        props[kNames[k]] = "not_checked";
        break;
    }
  }
  doc["properties"] = std::move(props);
  doc["violation_count"] = report.violation_count;
  Json list = Json::array();
  for (const AxiomViolation& v : report.violations) {
    Json item;
    item["property"] = v.property;
    item["u"] = v.u;
    item["v"] = v.v;
    if (v.via) item["via"] = *v.via;
    item["magnitude"] = real_to_json(v.magnitude);
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string similarity_report_to_json(
    const std::vector<std::string>& properties,
    const std::vector<SimilarityTableReport>& reports) {
  Json doc = Json::object();
  for (std::size_t p = 0; p < reports.size(); ++p) {
    const auto& r = reports[p];
    Json entry;
    entry["non_negativity"] = r.non_negative;
    entry["coincidence"] = r.coincidence;
    entry["symmetry"] = r.symmetric;
    entry["triangle"] = r.triangle;
    Json list = Json::array();
    for (const CaseViolation& v : r.violations) {
      Json item;
      item["axiom"] = std::string(to_string(v.axiom));
      item["first"] = v.first;
      item["second"] = v.second;
      if (v.via) item["via"] = *v.via;
      item["magnitude"] = real_to_json(v.magnitude);
      list.push_back(std::move(item));
    }
    entry["violations"] = std::move(list);
    doc[properties.at(p)] = std::move(entry);
  }
  return doc.dump(2) + "\n";
}

}  // namespace rsmc
