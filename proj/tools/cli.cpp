// Copyright 2026 The toruspenny Authors
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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toruspenny/catalog.hpp"
#include "toruspenny/error.hpp"
#include "toruspenny/graph.hpp"
#include "toruspenny/io.hpp"
#include "toruspenny/optimizer.hpp"
#include "toruspenny/packing.hpp"
#include "toruspenny/render.hpp"

namespace toruspenny::cli {
namespace {

using nlohmann::json;

json report(const char* command) {
  json doc = json::object();
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  return doc;
}

// "-" reads the whole of `in`.
std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::kInvalidInput, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw Error(Errc::kInvalidInput, "cannot write '" + path + "'");
}

// A graph argument is either a JSON file or a built-in name.
SmallGraph load_graph(const std::string& spec, std::istream& in) {
  if (spec == "-" || std::filesystem::is_regular_file(spec)) {
    return graph_from_json(read_input(spec, in));
  }
  return named_graph(spec);
}

// Reports number nodes from 1; JSON inputs are 0-based.
template <class Int>
std::vector<long long> one_based(const std::vector<Int>& v) {
  std::vector<long long> out;
  out.reserve(v.size());
  for (Int x : v) out.push_back(static_cast<long long>(x) + 1);
  return out;
}

json edges_json(const SmallGraph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back({i + 1, j + 1});
  return edges;
}

json contact_json(const ContactGraph& cg) {
  json edges = json::array();
  for (const auto& e : cg.edges) {
    json reals = json::array();
    for (const auto& r : e.realizations) reals.push_back({r.offset.mx, r.offset.my});
    edges.push_back({{"i", e.i + 1}, {"j", e.j + 1}, {"offsets", std::move(reals)}});
  }
  return edges;
}

json witness_json(const KuratowskiWitness& w) {
  json paths = json::array();
  for (const auto& p : w.paths) paths.push_back(one_based(p));
  return {{"kind", w.kind == KuratowskiKind::kK5 ? "K5" : "K33"},
          {"branch_vertices", one_based(w.branch_vertices)},
          {"paths", std::move(paths)}};
}

json report_json(const PackingReport& r) {
  json doc = json::object();
  doc["diameter"] = r.diameter;
  if (r.diameter_squared_exact) doc["diameter_squared"] = to_string(*r.diameter_squared_exact);
  doc["contact_count"] = r.contact_graph.edges.size();
  doc["contacts"] = contact_json(r.contact_graph);
  doc["degree_sequence"] = r.degree_sequence;
  doc["regular"] = r.regular ? json(*r.regular) : json(nullptr);
  doc["named_match"] = r.named_match ? json(*r.named_match) : json(nullptr);
  doc["planar"] = r.planar ? json(*r.planar) : json(nullptr);
  if (r.bipartite) {
    doc["bipartite"] = {one_based(r.bipartite->left), one_based(r.bipartite->right)};
  } else {
    doc["bipartite"] = nullptr;
  }
  return doc;
}

Configuration load_configuration(const std::string& path, std::istream& in) {
  return configuration_from_json(read_input(path, in));
}

int cmd_verify(const std::string& input, const std::string& expect, bool exact,
               std::optional<double> tol, std::istream& in, std::ostream& out) {
  const Configuration config = load_configuration(input, in);
  if (exact && !config.exact_mode()) {
    throw Error(Errc::kMode, "--exact needs a configuration with exact coordinates");
  }
  const double t = tol.value_or(exact ? 0.0 : kDefaultContactTol);
  const SmallGraph expected = load_graph(expect, in);
  const PennyVerdict verdict = verify_penny(config, expected, t);

  json doc = report("verify");
  doc["pass"] = verdict.pass;
  doc["n"] = config.size();
  doc["exact"] = config.exact_mode() && t == 0.0;
  doc["tolerance"] = t;
  doc["expected"] = {{"n", expected.size()}, {"edges", edges_json(expected)}};
  if (auto name = identify_named_graph(expected)) doc["expected"]["name"] = *name;
  if (verdict.contacts) {
    // Structural properties of the detected contact graph.
    doc["analysis"] = report_json(analyze(config, t));
  }
  // witness[k] is the expected-graph vertex matched to node k + 1.
  doc["witness"] = verdict.witness ? json(one_based(*verdict.witness)) : json(nullptr);
  json violations = json::array();
  for (const auto& v : verdict.violations) {
    violations.push_back({{"i", v.i + 1},
                          {"j", v.j + 1},
                          {"distance", v.distance},
                          {"relative_deviation", v.relative_deviation}});
  }
  doc["violations"] = std::move(violations);
  doc["diagnostics"] = verdict.diagnostics;
  out << doc.dump(2) << '\n';
  return verdict.pass ? kExitOk : kExitVerificationFailed;
}

int cmd_analyze(const std::string& input, std::optional<double> tol, std::istream& in,
                std::ostream& out) {
  const Configuration config = load_configuration(input, in);
  const double t = tol.value_or(config.exact_mode() ? 0.0 : kDefaultContactTol);
  json doc = report("analyze");
  doc["n"] = config.size();
  doc["exact"] = config.exact_mode() && t == 0.0;
  doc["tolerance"] = t;
  doc.update(report_json(analyze(config, t)));
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_optimize(int n, const OptimizerParams& params, const std::string& out_path,
                 std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const OptimizeResult result = maximize_min_distance(n, params);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const PackingReport analysis = analyze(result.configuration);

  json doc = report("optimize");
  doc["n"] = n;
  doc["seed"] = params.seed;
  doc["restarts"] = params.restarts;
  doc["diameter"] = result.diameter;
  doc["best_restart"] = result.best_restart;
  doc["restart_diameters"] = result.restart_diameters;
  doc["named_match"] = analysis.named_match ? json(*analysis.named_match) : json(nullptr);
  doc["contact_count"] = analysis.contact_graph.edges.size();
  doc["degree_sequence"] = analysis.degree_sequence;
  doc["configuration"] = json::parse(configuration_to_json(result.configuration));
  doc["seconds"] = seconds;
  if (!out_path.empty()) {
    write_file(out_path, configuration_to_json(result.configuration) + "\n");
    doc["output"] = out_path;
  }
  out << doc.dump(2) << '\n';
  return kExitOk;
}

json class_json(const SurveyClass& c) {
  return {{"hits", c.hits},
          {"diameter", c.diameter},
          {"first_trial", c.first_trial},
          {"representative", json::parse(configuration_to_json(c.representative))}};
}

int cmd_survey(const std::string& target_name, int trials, const OptimizerParams& params,
               std::ostream& out) {
  const SurveyTarget target = survey_target(target_name);
  const SurveyResult result = uniqueness_survey(target, trials, params);
  json doc = report("survey");
  doc["target"] = target.name;
  doc["seed"] = params.seed;
  doc["trials"] = result.trials;
  doc["failures"] = result.failures;
  doc["filtered_out"] = result.filtered_out;
  doc["diameter_tolerance"] = kSurveyDiameterTol;
  if (target.reference) doc["reference_diameter"] = packing_diameter(*target.reference);
  json classes = json::array();
  for (const auto& c : result.classes) classes.push_back(class_json(c));
  doc["class_count"] = result.classes.size();
  doc["classes"] = std::move(classes);
  doc["reference_class"] =
      result.reference_class ? json(*result.reference_class) : json(nullptr);
  json unfiltered = json::array();
  for (const auto& c : result.unfiltered_classes) unfiltered.push_back(class_json(c));
  doc["unfiltered_classes"] = std::move(unfiltered);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

std::vector<std::string> drawing_names() {
  std::vector<std::string> names{"k7"};
  for (int r = 0; r < 7; ++r) names.push_back("k6-" + std::to_string(r));
  return names;
}

std::optional<ToroidalDrawing> catalog_drawing(const std::string& name) {
  if (name == "k7") return k7_lattice_drawing();
  if (name.size() == 4 && name.rfind("k6-", 0) == 0 && name[3] >= '0' && name[3] <= '6') {
    return k6_drawing(static_cast<std::size_t>(name[3] - '0'));
  }
  return std::nullopt;
}

int cmd_catalog_list(std::ostream& out) {
  json doc = report("catalog list");
  doc["configurations"] = catalog_names();
  doc["drawings"] = drawing_names();
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_catalog_emit(const std::string& name, std::ostream& out) {
  json doc;
  if (auto drawing = catalog_drawing(name)) {
    doc = json::parse(drawing_to_json(*drawing));
  } else {
    doc = json::parse(configuration_to_json(catalog_config(name)));
  }
  doc["schema_version"] = kSchemaVersion;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_render(const std::string& input, const RenderOptions& opts, const std::string& out_path,
               std::optional<double> tol, std::istream& in, std::ostream& out) {
  const std::string text = read_input(input, in);
  std::string svg;
  std::size_t n = 0;
  if (is_drawing_json(text)) {
    const ToroidalDrawing drawing = drawing_from_json(text);
    n = drawing.configuration.size();
    svg = render_drawing(drawing, opts);
  } else {
    const Configuration config = configuration_from_json(text);
    n = config.size();
    const double t = tol.value_or(config.exact_mode() ? 0.0 : kDefaultContactTol);
    svg = render_packing(config, contact_graph(config, t), opts);
  }
  if (out_path.empty()) {
    out << svg;
    return kExitOk;
  }
  write_file(out_path, svg);
  json doc = report("render");
  doc["output"] = out_path;
  doc["tiling"] = opts.tiling;
  doc["circles"] = n * static_cast<std::size_t>(opts.tiling * opts.tiling);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_bound(std::uint64_t n, std::ostream& out) {
  json doc = report("bound");
  doc["n"] = n;
  doc["bound"] = harborth_bound(n);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int cmd_planar(const std::string& graph_spec, std::istream& in, std::ostream& out) {
  const SmallGraph g = load_graph(graph_spec, in);
  const PlanarityResult result = is_planar(g, true);
  json doc = report("planar");
  doc["n"] = g.size();
  doc["edge_count"] = g.edge_count();
  doc["planar"] = result.planar;
  doc["witness"] = result.witness ? witness_json(*result.witness) : json(nullptr);
  out << doc.dump(2) << '\n';
  return kExitOk;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kConvergence:
      return kExitNumerical;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Penny packings on the flat square torus", "toruspenny"};
  app.require_subcommand(1);

  std::string input;
  std::string expect;
  std::string out_path;
  std::string name;
  std::optional<double> tol;
  bool exact = false;
  int n = 0;
  int trials = 200;
  std::uint64_t bound_n = 0;
  std::string target = "k33";
  OptimizerParams params;
  RenderOptions render_opts;
  bool no_edges = false;
  bool no_polish = false;

  auto* verify = app.add_subcommand("verify", "Check a configuration realizes a penny graph");
  verify->add_option("config", input, "Configuration JSON ('-' for stdin)")->required();
  verify->add_option("--expect", expect, "Graph name (K5, K33, octahedron, ...) or JSON file")
      ->required();
  verify->add_flag("--exact", exact, "Use exact rational arithmetic");
  verify->add_option("--tol", tol, "Relative contact tolerance")->check(CLI::NonNegativeNumber);

  auto* analyze_cmd = app.add_subcommand("analyze", "Report the contact structure of a packing");
  analyze_cmd->add_option("config", input, "Configuration JSON ('-' for stdin)")->required();
  analyze_cmd->add_option("--tol", tol, "Relative contact tolerance")
      ->check(CLI::NonNegativeNumber);

  auto* optimize = app.add_subcommand("optimize", "Maximize the minimum distance of n points");
  optimize->add_option("--n", n, "Number of points")->required();
  optimize->add_option("--restarts", params.restarts, "Random restarts")->capture_default_str();
  optimize->add_option("--seed", params.seed, "RNG seed")->capture_default_str();
  optimize->add_option("--threads", params.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  optimize->add_option("--max-iterations", params.max_iterations, "Iterations per stage")
      ->capture_default_str();
  optimize->add_flag("--no-polish", no_polish, "Skip the contact-equation polish");
  optimize->add_option("--out", out_path, "Also write the configuration here");

  auto* survey = app.add_subcommand("survey", "Search for distinct penny realizations");
  survey->add_option("--target", target, "Target graph (k33, k5, octahedron)")
      ->capture_default_str();
  survey->add_option("--trials", trials, "Number of trials")->capture_default_str();
  survey->add_option("--seed", params.seed, "RNG seed")->capture_default_str();
  survey->add_option("--threads", params.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "Built-in configurations and drawings");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "List catalog entries");
  auto* catalog_emit = catalog->add_subcommand("emit", "Print a catalog entry as JSON");
  catalog_emit->add_option("name", name, "Entry name")->required();

  auto* render = app.add_subcommand("render", "Render a configuration or drawing as SVG");
  render->add_option("--input", input, "Configuration or drawing JSON ('-' for stdin)")
      ->required();
  render->add_option("--tiling", render_opts.tiling, "k x k tiling")->capture_default_str();
  render->add_option("--size", render_opts.canvas_size, "Canvas size in pixels")
      ->capture_default_str();
  render->add_option("--out", out_path, "Output file (default: stdout)");
  render->add_flag("--no-edges", no_edges, "Omit contact edges");
  render->add_flag("--labels", render_opts.show_labels, "Number the points");
  render->add_option("--tol", tol, "Relative contact tolerance")->check(CLI::NonNegativeNumber);

  auto* bound = app.add_subcommand("bound", "Maximum edge count of an n-vertex penny graph");
  bound->add_option("--n", bound_n, "Number of vertices")->required();

  auto* planar = app.add_subcommand("planar", "Planarity test with a Kuratowski witness");
  planar->add_option("graph", input, "Graph JSON file ('-' for stdin) or name")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(input, expect, exact, tol, in, out);
    if (*analyze_cmd) return cmd_analyze(input, tol, in, out);
    if (*optimize) {
      params.polish = !no_polish;
      return cmd_optimize(n, params, out_path, out);
    }
    if (*survey) return cmd_survey(target, trials, params, out);
    if (*catalog_list) return cmd_catalog_list(out);
    if (*catalog_emit) return cmd_catalog_emit(name, out);
    if (*render) {
      render_opts.show_edges = !no_edges;
      return cmd_render(input, render_opts, out_path, tol, in, out);
    }
    if (*bound) return cmd_bound(bound_n, out);
    if (*planar) return cmd_planar(input, in, out);
  } catch (const Error& e) {
    err << "toruspenny: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "toruspenny: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace toruspenny::cli
