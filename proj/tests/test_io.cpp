#include <doctest.h>

#include <random>

#include "rlab/errors.hpp"
#include "rlab/io.hpp"
#include "support.hpp"

using namespace rlab;

TEST_CASE("graph documents round-trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testing::random_graph(2 + trial % 9, 0.4, rng);
    GraphDoc doc = graph_doc(g, "random");
    if (trial % 2) {
      doc.p = 5;
      doc.q = 13;
    }
    const json j = to_json(doc);
    CHECK(graph_from_json(json::parse(dump(j))) == doc);
    CHECK(to_graph(doc).edge_count() == g.edge_count());
  }
}

TEST_CASE("complex documents round-trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto X = testing::random_2complex_complete_skeleton(4 + trial % 5, 0.5, rng);
    ComplexDoc doc = complex_doc(X, json{{"construction", "random"}, {"trial", trial}});
    if (trial % 3 == 0) {
      doc.vertex_colors = std::vector<int>(X.vertex_count(), 1);
      doc.edge_colors = std::vector<std::array<int, 3>>{{0, 1, 2}};
      doc.hecke = {{{0, 1, 1}, {1, 0, 1}}};
    }
    const ComplexDoc back = complex_from_json(json::parse(dump(to_json(doc))));
    CHECK(back == doc);
    const SimplicialComplex Y = to_complex(back);
    for (int k = 0; k <= X.dim(); ++k) CHECK(Y.flat(k) == X.flat(k));
  }
}

TEST_CASE("report documents round-trip and tag numerics") {
  ReportDoc r;
  r.operation = "demo";
  r.parameters = {{"n", exact(7)}, {"big", exact(std::string("123456789012345678901234567890"))}};
  r.results = {{"x", measured(1.5, 1e-9)}, {"list", json::array({exact(1), measured(2.0, 0.1)})}, {"flag", true}};
  r.tolerances = {{"x", 1e-9}};
  r.check("first", true);
  r.check("second", false);
  CHECK_FALSE(r.pass);
  const json j = to_json(r);
  CHECK(report_from_json(json::parse(dump(j))) == r);
  CHECK(numerics_tagged(j));
  json bad = j;
  bad["results"]["raw"] = 3.0;
  CHECK_FALSE(numerics_tagged(bad));
}

TEST_CASE("malformed documents are rejected") {
  GraphDoc doc = graph_doc(Graph::from_edges(3, {{0, 1}}), "x");
  json j = to_json(doc);
  json wrong_version = j;
  wrong_version["schema_version"] = 2;
  CHECK_THROWS_AS(graph_from_json(wrong_version), InvalidInput);
  json wrong_kind = j;
  wrong_kind["kind"] = "complex";
  CHECK_THROWS_AS(graph_from_json(wrong_kind), InvalidInput);
  json bad_edge = j;
  bad_edge["edges"] = json::array({json::array({0, 9})});
  CHECK_THROWS_AS(to_graph(graph_from_json(bad_edge)), InvalidInput);
  CHECK_THROWS_AS(complex_from_json(json::parse("{\"kind\":\"complex\"}")), InvalidInput);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), InvalidInput);
}
