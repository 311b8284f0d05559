#include "rlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rlab/errors.hpp"

namespace rlab {

namespace {

void expect_header(const json& j, const std::string& kind) {
  if (!j.is_object()) throw InvalidInput("document is not a JSON object");
  if (j.value("kind", "") != kind) throw InvalidInput("expected a " + kind + " document");
  if (j.value("schema_version", -1) != kSchemaVersion)
    throw InvalidInput("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
}

template <class Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

GraphDoc graph_doc(const Graph& g, std::string construction) {
  GraphDoc d;
  d.n = g.n();
  d.edges = g.edges();
  d.regular_degree = g.regular_degree();
  d.bipartite = g.bipartition().has_value();
  d.construction = std::move(construction);
  return d;
}

Graph to_graph(const GraphDoc& doc) { return Graph::from_edges(doc.n, doc.edges); }

ComplexDoc complex_doc(const SimplicialComplex& X, json provenance) {
  ComplexDoc d;
  d.vertex_count = X.vertex_count();
  for (int k = 0; k <= X.dim(); ++k) {
    std::vector<std::vector<int>> level;
    level.reserve(X.count(k));
    for (std::size_t i = 0; i < X.count(k); ++i) level.push_back(X.face_vec(k, i));
    d.faces.push_back(std::move(level));
  }
  d.provenance = std::move(provenance);
  return d;
}

ComplexDoc complex_doc(const GraphDoc& g) {
  auto d = complex_doc(SimplicialComplex::from_graph(to_graph(g)), json{{"construction", "graph"}, {"source", g.construction}});
  return d;
}

SimplicialComplex to_complex(const ComplexDoc& doc) {
  std::vector<std::vector<int>> faces;
  for (const auto& level : doc.faces)
    for (const auto& f : level) {
      if (!std::is_sorted(f.begin(), f.end())) throw InvalidInput("faces must list sorted vertices");
      for (int v : f)
        if (v < 0 || v >= doc.vertex_count) throw InvalidInput("face vertex out of range");
      faces.push_back(f);
    }
  auto X = SimplicialComplex::from_faces(doc.vertex_count, faces);
  for (std::size_t k = 0; k < doc.faces.size(); ++k)
    if (X.count(static_cast<int>(k)) != doc.faces[k].size())
      throw InvalidInput("face list is not closed under taking faces or has duplicates");
  return X;
}

void ReportDoc::check(const std::string& name, bool ok) {
  checks.emplace_back(name, ok);
  pass = pass && ok;
}

json measured(double v, double tol) { return json{{"value", v}, {"tol", tol}}; }
json exact(std::int64_t v) { return json{{"value", v}, {"exact", true}}; }
json exact(const std::string& big_integer) { return json{{"value", big_integer}, {"exact", true}}; }

bool numerics_tagged(const json& j) {
  if (j.is_number()) return false;
  if (j.is_array()) return std::all_of(j.begin(), j.end(), [](const json& e) { return numerics_tagged(e); });
  if (!j.is_object()) return true;
  if (j.contains("value") && (j.contains("tol") || j.contains("exact"))) {
    if (j.contains("exact") && j.at("exact") != true) return false;
    if (j.contains("tol") && !j.at("tol").is_number()) return false;
    return j.size() == 2;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "schema_version" || it.key() == "tolerances") continue;
    if (!numerics_tagged(it.value())) return false;
  }
  return true;
}

json to_json(const GraphDoc& d) {
  json j{{"kind", "graph"}, {"schema_version", kSchemaVersion}, {"n", d.n}, {"construction", d.construction}};
  json edges = json::array();
  for (auto [u, v] : d.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  json meta = json::object();
  if (d.p) meta["p"] = *d.p;
  if (d.q) meta["q"] = *d.q;
  if (d.regular_degree) meta["regular_degree"] = *d.regular_degree;
  if (d.bipartite) meta["bipartite"] = *d.bipartite;
  j["metadata"] = std::move(meta);
  return j;
}

GraphDoc graph_from_json(const json& j) {
  expect_header(j, "graph");
  return guarded([&] {
    GraphDoc d;
    d.n = j.at("n").get<int>();
    d.construction = j.value("construction", "");
    for (const auto& e : j.at("edges")) {
      if (e.size() != 2) throw InvalidInput("edge must have two endpoints");
      d.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    const json& m = j.at("metadata");
    if (m.contains("p")) d.p = m["p"].get<std::uint64_t>();
    if (m.contains("q")) d.q = m["q"].get<std::uint64_t>();
    if (m.contains("regular_degree")) d.regular_degree = m["regular_degree"].get<int>();
    if (m.contains("bipartite")) d.bipartite = m["bipartite"].get<bool>();
    return d;
  });
}

json to_json(const ComplexDoc& d) {
  json j{{"kind", "complex"}, {"schema_version", kSchemaVersion}, {"vertex_count", d.vertex_count}};
  j["faces"] = d.faces;
  if (d.vertex_colors) j["vertex_colors"] = *d.vertex_colors;
  if (d.edge_colors) j["edge_colors"] = *d.edge_colors;
  j["provenance"] = d.provenance;
  if (!d.hecke.empty()) j["hecke"] = d.hecke;
  return j;
}

ComplexDoc complex_from_json(const json& j) {
  expect_header(j, "complex");
  return guarded([&] {
    ComplexDoc d;
    d.vertex_count = j.at("vertex_count").get<int>();
    d.faces = j.at("faces").get<std::vector<std::vector<std::vector<int>>>>();
    if (j.contains("vertex_colors")) d.vertex_colors = j["vertex_colors"].get<std::vector<int>>();
    if (j.contains("edge_colors")) d.edge_colors = j["edge_colors"].get<std::vector<std::array<int, 3>>>();
    d.provenance = j.value("provenance", json::object());
    if (j.contains("hecke")) d.hecke = j["hecke"].get<std::vector<std::vector<std::array<std::int64_t, 3>>>>();
    return d;
  });
}

json to_json(const ReportDoc& d) {
  json checks = json::array();
  for (const auto& [name, ok] : d.checks) checks.push_back({{"name", name}, {"pass", ok}});
  return json{{"kind", "report"},          {"schema_version", kSchemaVersion}, {"operation", d.operation},
              {"parameters", d.parameters}, {"results", d.results},            {"tolerances", d.tolerances},
              {"seeds", d.seeds},           {"checks", checks},                {"pass", d.pass}};
}

ReportDoc report_from_json(const json& j) {
  expect_header(j, "report");
  return guarded([&] {
    ReportDoc d;
    d.operation = j.at("operation").get<std::string>();
    d.parameters = j.at("parameters");
    d.results = j.at("results");
    d.tolerances = j.at("tolerances");
    d.seeds = j.at("seeds");
    for (const auto& c : j.at("checks")) d.checks.emplace_back(c.at("name").get<std::string>(), c.at("pass").get<bool>());
    d.pass = j.at("pass").get<bool>();
    return d;
  });
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
  if (!out) throw InvalidInput("write failed for " + path);
}

}  // namespace rlab
