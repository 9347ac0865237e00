#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "annsub/error.hpp"
#include "annsub/graph.hpp"
#include "annsub/lattice.hpp"

namespace annsub {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kGraphSchema = "annsub.graph/1";

enum class ExportFormat { dot, json };

inline ExportFormat parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::dot;
  if (text == "json") return ExportFormat::json;
  throw ParseError("unknown export format '" + std::string(text) + "' (expected dot or json)");
}

/// Undirected DOT graph; nodes are `n<submodule id>` labelled by generators.
inline std::string to_dot(const AnnGraph& g, const SubmoduleLattice& lattice) {
  std::ostringstream out;
  out << "graph " << (g.variant == GraphVariant::ag ? "AG" : "AG_star") << " {\n";
  for (auto id : g.vertices) out << "  n" << id << " [label=\"" << lattice.label(id) << "\"];\n";
  for (auto [i, j] : g.edges()) out << "  n" << g.vertices[i] << " -- n" << g.vertices[j] << ";\n";
  out << "}\n";
  return out.str();
}

inline Json analysis_json(const AnnGraph& g, const GraphAnalysis& a) {
  auto id_of = [&](std::size_t pos) { return g.vertices[pos]; };
  auto opt = [](const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); };
  Json j;
  j["connected"] = a.connected;
  j["diameter"] = opt(a.diameter);
  j["complete"] = a.complete;
  j["star"] = a.star;
  j["center"] = a.center ? Json(id_of(*a.center)) : Json(nullptr);
  j["bipartite"] = a.bipartite;
  j["complete_bipartite"] = a.complete_bipartite;
  j["clique"] = opt(a.clique_number);
  j["chromatic"] = opt(a.chromatic_number);
  j["clique_bounds"] = {a.clique_lower, a.clique_upper};
  j["chromatic_bounds"] = {a.chromatic_lower, a.chromatic_upper};
  Json universal = Json::array();
  for (auto v : a.universal) universal.push_back(id_of(v));
  j["universal"] = universal;
  Json clique = Json::array();
  for (auto v : a.clique) clique.push_back(id_of(v));
  j["clique_certificate"] = clique;
  j["coloring"] = a.coloring;
  return j;
}

/// Graph document; `analysis` and `checks` are emitted as null / [] when absent.
inline Json to_json(const AnnGraph& g, const SubmoduleLattice& lattice, const GraphAnalysis* analysis = nullptr,
                    Json checks = Json::array()) {
  Json doc;
  doc["schema"] = kGraphSchema;
  doc["instance"] = {{"ring", lattice.ring().to_string()}, {"module", lattice.module().to_string()}};
  doc["variant"] = to_string(g.variant);
  Json vertices = Json::array();
  for (auto id : g.vertices) {
    Json gens = Json::array();
    for (auto x : lattice[id].generators) gens.push_back(lattice.module().element_to_string(x));
    vertices.push_back({{"id", id},
                        {"elements", lattice.element_labels(id)},
                        {"generators", gens},
                        {"colon", to_string(lattice.ring(), lattice.colon(id))}});
  }
  doc["vertices"] = vertices;
  Json edges = Json::array();
  for (auto [i, j] : g.edges()) edges.push_back({g.vertices[i], g.vertices[j]});
  doc["edges"] = edges;
  doc["analysis"] = analysis ? analysis_json(g, *analysis) : Json(nullptr);
  doc["checks"] = std::move(checks);
  return doc;
}

inline std::string export_graph(const AnnGraph& g, const SubmoduleLattice& lattice, ExportFormat format,
                                const GraphAnalysis* analysis = nullptr, Json checks = Json::array()) {
  if (format == ExportFormat::dot) return to_dot(g, lattice);
  return to_json(g, lattice, analysis, std::move(checks)).dump(2) + "\n";
}

}  // namespace annsub
