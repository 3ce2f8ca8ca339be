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

#include "toruspenny/io.hpp"

#include <cmath>

#include "json.hpp"
#include "toruspenny/error.hpp"

namespace toruspenny {
namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::kInvalidInput, std::string("invalid JSON: ") + e.what());
  }
}

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::kInvalidInput, "malformed document: " + what);
}

Rational exact_coordinate(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw Error(Errc::kMode, "exact mode requires rational-string coordinates, got " + v.dump());
}

double numeric_coordinate(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return to_double(parse_rational(v.get<std::string>()));
  malformed("coordinate must be a number or rational string, got " + v.dump());
}

json configuration_object(const Configuration& config) {
  json doc = json::object();
  if (config.label()) doc["label"] = *config.label();
  doc["torus"] = kTorusTag;
  doc["exact"] = config.exact_mode();
  json points = json::array();
  if (config.exact_mode()) {
    for (const auto& p : config.exact_points()) points.push_back({to_string(p.x), to_string(p.y)});
  } else {
    for (const auto& p : config.points()) points.push_back({p.x, p.y});
  }
  doc["points"] = std::move(points);
  return doc;
}

Configuration configuration_from_object(const json& doc) {
  if (!doc.is_object()) malformed("configuration must be an object");
  if (doc.contains("torus") &&
      (!doc["torus"].is_string() || doc["torus"].get<std::string>() != kTorusTag)) {
    malformed("unsupported torus '" + doc["torus"].dump() + "'");
  }
  bool exact = false;
  if (doc.contains("exact")) {
    if (!doc["exact"].is_boolean()) malformed("'exact' must be a boolean");
    exact = doc["exact"].get<bool>();
  }
  if (!doc.contains("points") || !doc["points"].is_array()) malformed("missing 'points' array");
  std::optional<std::string> label;
  if (doc.contains("label") && doc["label"].is_string()) label = doc["label"].get<std::string>();

  const json& points = doc["points"];
  for (const auto& p : points) {
    if (!p.is_array() || p.size() != 2) malformed("each point must be [x, y]");
  }
  if (exact) {
    std::vector<ExactPoint> pts;
    for (const auto& p : points) pts.push_back({exact_coordinate(p[0]), exact_coordinate(p[1])});
    return Configuration::exact(std::move(pts), std::move(label));
  }
  std::vector<Point> pts;
  for (const auto& p : points) pts.push_back({numeric_coordinate(p[0]), numeric_coordinate(p[1])});
  return Configuration::numeric(std::move(pts), std::move(label));
}

}  // namespace

std::string configuration_to_json(const Configuration& config) {
  return configuration_object(config).dump(2);
}

Configuration configuration_from_json(std::string_view text) {
  return configuration_from_object(parse(text));
}

std::string graph_to_json(const SmallGraph& graph) {
  json doc;
  doc["n"] = graph.size();
  json edges = json::array();
  for (auto [i, j] : graph.edges()) edges.push_back({i, j});
  doc["edges"] = std::move(edges);
  return doc.dump();
}

SmallGraph graph_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer()) {
    malformed("graph needs an integer 'n'");
  }
  SmallGraph g(doc["n"].get<int>());
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) malformed("'edges' must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        malformed("each edge must be [i, j]");
      }
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  }
  return g;
}

std::string drawing_to_json(const ToroidalDrawing& drawing) {
  json doc = configuration_object(drawing.configuration);
  json edges = json::array();
  for (const auto& e : drawing.edges) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"delta", {e.displacement.delta.x, e.displacement.delta.y}},
                     {"offset", {e.displacement.offset.mx, e.displacement.offset.my}}});
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2);
}

ToroidalDrawing drawing_from_json(std::string_view text) try {
  const json doc = parse(text);
  ToroidalDrawing d{configuration_from_object(doc), {}};
  if (!doc.contains("edges") || !doc["edges"].is_array()) malformed("drawing needs 'edges'");
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("delta")) {
      malformed("drawing edge needs 'from', 'to' and 'delta'");
    }
    DrawingEdge edge;
    const long long from = e["from"].get<long long>();
    const long long to = e["to"].get<long long>();
    if (from < 0 || to < 0) malformed("negative vertex index");
    edge.from = static_cast<std::size_t>(from);
    edge.to = static_cast<std::size_t>(to);
    const json& delta = e["delta"];
    if (!delta.is_array() || delta.size() != 2) malformed("'delta' must be [dx, dy]");
    edge.displacement.delta = {numeric_coordinate(delta[0]), numeric_coordinate(delta[1])};
    if (e.contains("offset")) {
      edge.displacement.offset = {e["offset"][0].get<int>(), e["offset"][1].get<int>()};
    }
    d.edges.push_back(edge);
  }
  return d;
} catch (const json::exception& e) {
  malformed(e.what());
}

bool is_drawing_json(std::string_view text) {
  const json doc = parse(text);
  return doc.is_object() && doc.contains("edges") && doc["edges"].is_array();
}

}  // namespace toruspenny
