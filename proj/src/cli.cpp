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

#include "rsmc/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "rsmc/datasets.hpp"
#include "rsmc/errors.hpp"
#include "rsmc/io.hpp"
#include "rsmc/number_format.hpp"
#include "rsmc/pipeline.hpp"
#include "rsmc/similarity.hpp"

namespace rsmc {

namespace {

struct SourceOptions {
  std::string input;
  std::string builtin;
  bool directed = false;
  std::string rsm;
  std::string similarity_spec;
  std::string matrix;
};

void add_source_options(CLI::App* cmd, SourceOptions& opts) {
  cmd->add_option("--input", opts.input, "edge-list file (src<TAB>dst[<TAB>w])");
  cmd->add_option("--builtin", opts.builtin, "embedded dataset name");
  cmd->add_flag("--directed", opts.directed, "read --input as directed");
  cmd->add_option("--rsm", opts.rsm, "relation strength measure")
      ->check(CLI::IsMember({"sdf", "erf"}));
  cmd->add_option("--similarity-spec", opts.similarity_spec,
                  "similarity network JSON");
  cmd->add_option("--matrix", opts.matrix, "precomputed RSM matrix (CSV/JSON)");
}

PipelineConfig to_config(const SourceOptions& opts) {
  PipelineConfig cfg;
  if (!opts.input.empty()) cfg.input_path = opts.input;
  if (!opts.builtin.empty()) cfg.builtin = opts.builtin;
  cfg.directed = opts.directed;
  if (!opts.rsm.empty()) cfg.rsm = parse_rsm_source(opts.rsm);
  if (!opts.similarity_spec.empty()) cfg.similarity_spec_path = opts.similarity_spec;
  if (!opts.matrix.empty()) cfg.matrix_path = opts.matrix;
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << text;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Community detection by relation strength thresholds", "rsmc"};
  app.require_subcommand(1);

  // detect
  SourceOptions detect_src;
  std::optional<double> epsilon;
  std::string sweep;
  double detect_tol = kDefaultCompareTolerance;
  std::string detect_format = "json";
  std::string detect_out;
  bool timing = false;
  auto* detect = app.add_subcommand("detect", "enumerate maximal communities");
  add_source_options(detect, detect_src);
  auto* eps_opt = detect->add_option("--epsilon", epsilon, "community parameter");
  auto* sweep_opt = detect->add_option(
      "--epsilon-sweep", sweep, "lo:hi:step; emit community counts as CSV");
  eps_opt->excludes(sweep_opt);
  detect->add_option("--tol", detect_tol, "additive comparison tolerance");
  detect->add_option("--format", detect_format, "json | dot | csv")
      ->check(CLI::IsMember({"json", "dot", "csv"}));
  detect->add_option("--out", detect_out, "output file (default stdout)");
  detect->add_flag("--timing", timing, "report wall time on stderr");

  // matrix
  SourceOptions matrix_src;
  std::string matrix_format = "csv";
  std::string matrix_out;
  auto* matrix = app.add_subcommand("matrix", "emit the RSM matrix");
  add_source_options(matrix, matrix_src);
  matrix->add_option("--format", matrix_format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  matrix->add_option("--out", matrix_out, "output file (default stdout)");

  // validate-rsm
  SourceOptions validate_src;
  double validate_tol = kAxiomTolerance;
  bool symmetric = false;
  std::string validate_out;
  auto* validate = app.add_subcommand(
      "validate-rsm", "check a matrix against the RSM axioms");
  add_source_options(validate, validate_src);
  validate->add_option("--tol", validate_tol, "axiom tolerance");
  validate->add_flag("--symmetric", symmetric,
                     "require symmetry when no graph is given");
  validate->add_option("--out", validate_out, "report file (default stdout)");

  // validate-similarity
  std::string sim_spec;
  double sim_tol = 0.0;
  auto* validate_sim = app.add_subcommand(
      "validate-similarity", "check the case tables of a similarity spec");
  validate_sim->add_option("--similarity-spec", sim_spec, "spec JSON")
      ->required();
  validate_sim->add_option("--tol", sim_tol, "axiom tolerance");

  // datasets
  auto* datasets = app.add_subcommand("datasets", "list embedded datasets");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*detect) {
      PipelineConfig cfg = to_config(detect_src);
      cfg.tolerance = detect_tol;
      cfg.format = parse_output_format(detect_format);
      if (!epsilon && sweep.empty()) {
        throw InputError("--epsilon is required (or --epsilon-sweep)");
      }
      if (!sweep.empty()) {
        cfg.validate();
        const SweepRange range = parse_sweep_range(sweep);
        RsmInput input = load_rsm_input(cfg);
        emit(sweep_to_csv(epsilon_sweep(input.matrix, range, cfg.tolerance)),
             detect_out, out);
        return kExitOk;
      }
      cfg.epsilon = *epsilon;
      DetectionResult result = run_pipeline(cfg);
      emit(render(result, cfg.format), detect_out, out);
      if (timing) {
        err << "rsm=" << to_string(result.metadata.rsm)
            << " vertices=" << result.metadata.vertex_count
            << " edges=" << result.metadata.edge_count
            << " effective_edges=" << result.metadata.effective_edge_count
            << " communities=" << result.metadata.community_count
            << " seconds=" << result.metadata.wall_seconds << "\n";
      }
      return kExitOk;
    }

    if (*matrix) {
      PipelineConfig cfg = to_config(matrix_src);
      cfg.validate();
      RsmInput input = load_rsm_input(cfg);
      emit(matrix_format == "json" ? matrix_to_json(input.matrix)
                                   : matrix_to_csv(input.matrix),
           matrix_out, out);
      return kExitOk;
    }

    if (*validate) {
      PipelineConfig cfg = to_config(validate_src);
      cfg.validate();
      RsmInput input = load_rsm_input(cfg);
      RsmValidationReport report =
          input.graph ? validate_rsm(input.matrix, *input.graph, validate_tol)
                      : validate_rsm(input.matrix, validate_tol,
                                     symmetric || input.matrix.source ==
                                                      RsmSource::kSimilarity);
      emit(validation_report_to_json(report), validate_out, out);
      return report.passed() ? kExitOk : kExitCheckFailed;
    }

    if (*validate_sim) {
      SimilaritySpec spec = parse_similarity_spec(read_file(sim_spec));
      std::vector<SimilarityTableReport> reports;
      bool ok = true;
      for (const CaseTable& table : spec.tables) {
        reports.push_back(validate_similarity_table(table, sim_tol));
        ok = ok && reports.back().valid();
      }
      out << similarity_report_to_json(spec.properties, reports);
      for (std::size_t p = 0; p < reports.size(); ++p) {
        if (!reports[p].triangle) {
          err << "warning: table for '" << spec.properties[p]
              << "' violates the triangle inequality; the combined measure "
                 "may too\n";
        }
      }
      return ok ? kExitOk : kExitCheckFailed;
    }

    if (*datasets) {
      for (const std::string& name : builtin_dataset_names()) {
        const Graph g = load_builtin_dataset(name);
        out << name << "\t" << g.vertex_count() << " vertices\t"
            << g.edge_count() << " edges\n";
      }
      return kExitOk;
    }
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << "\n";
    return kExitNumericalError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace rsmc
