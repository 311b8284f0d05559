#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rlab/complex.hpp"
#include "rlab/graph.hpp"

namespace rlab {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct GraphDoc {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, lexicographic
  std::optional<std::uint64_t> p, q;
  std::optional<int> regular_degree;
  std::optional<bool> bipartite;
  std::string construction;
  bool operator==(const GraphDoc&) const = default;
};

/// Fills regular_degree and bipartite from the graph.
GraphDoc graph_doc(const Graph& g, std::string construction);
Graph to_graph(const GraphDoc& doc);

struct ComplexDoc {
  int vertex_count = 0;
  std::vector<std::vector<std::vector<int>>> faces;  // faces[k]: sorted k-faces, lexicographic
  std::optional<std::vector<int>> vertex_colors;
  std::optional<std::vector<std::array<int, 3>>> edge_colors;  // (u, v, color of u -> v), u < v
  json provenance = json::object();
  std::vector<std::vector<std::array<std::int64_t, 3>>> hecke;  // (row, col, value) per operator
  bool operator==(const ComplexDoc&) const = default;
};

ComplexDoc complex_doc(const SimplicialComplex& X, json provenance);
SimplicialComplex to_complex(const ComplexDoc& doc);
/// A graph document read as its 1-dimensional complex.
ComplexDoc complex_doc(const GraphDoc& g);

struct ReportDoc {
  std::string operation;
  json parameters = json::object();
  json results = json::object();
  json tolerances = json::object();
  json seeds = json::object();
  std::vector<std::pair<std::string, bool>> checks;
  bool pass = true;
  bool operator==(const ReportDoc&) const = default;
  /// Records a named check and folds it into pass.
  void check(const std::string& name, bool ok);
};

/// {"value": v, "tol": t}.
json measured(double v, double tol);
/// {"value": v, "exact": true}.
json exact(std::int64_t v);
json exact(const std::string& big_integer);
/// True when every number outside schema_version and the tolerances table
/// sits in a value/tol or value/exact wrapper.
bool numerics_tagged(const json& j);

json to_json(const GraphDoc& d);
json to_json(const ComplexDoc& d);
json to_json(const ReportDoc& d);
/// InvalidInput on a wrong kind, schema version or malformed field.
GraphDoc graph_from_json(const json& j);
ComplexDoc complex_from_json(const json& j);
ReportDoc report_from_json(const json& j);

std::string dump(const json& j);
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace rlab
