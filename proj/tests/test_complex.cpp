#include <random>

#include "doctest.h"
#include "rlab/complex.hpp"
#include "rlab/errors.hpp"
#include "rlab/spectra.hpp"
#include "support.hpp"

using namespace rlab;
using rlab::testing::complete_graph;
using rlab::testing::random_complex;

namespace {

std::vector<int> v(std::initializer_list<int> l) { return l; }

SimplicialComplex solid_triangle() { return SimplicialComplex::from_faces(3, {{0, 1, 2}}); }
SimplicialComplex hollow_triangle() { return SimplicialComplex::from_faces(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Cone over X with apex n.
SimplicialComplex cone(const SimplicialComplex& X) {
  const int n = X.vertex_count();
  std::vector<std::vector<int>> faces{{n}};
  for (int k = 0; k <= X.dim(); ++k)
    for (std::size_t i = 0; i < X.count(k); ++i) {
      auto f = X.face_vec(k, i);
      f.push_back(n);
      faces.push_back(f);
    }
  return SimplicialComplex::from_faces(n + 1, faces);
}

}  // namespace

TEST_CASE("incidence numbers") {
  CHECK(incidence(v({0, 1, 2}), v({0, 2})) == -1);
  CHECK(incidence(v({0, 1, 2}), v({1, 2})) == 1);
  CHECK(incidence(v({0, 1, 2}), v({0, 1})) == 1);
  CHECK(incidence(v({0, 1}), v({2})) == 0);
  CHECK(incidence(v({3}), v({})) == 1);
  CHECK_THROWS_AS(incidence(v({0, 1, 2}), v({0})), InvalidInput);
}

TEST_CASE("boundary matrices") {
  auto X = solid_triangle();
  auto b2 = boundary_matrix(X, 2);
  // Edge order is lexicographic: {01},{02},{12}.
  CHECK(b2.rows() == 3);
  CHECK(b2.at(0, 0) == 1);
  CHECK(b2.at(1, 0) == -1);
  CHECK(b2.at(2, 0) == 1);
  auto b1 = boundary_matrix(X, 1);
  CHECK(b1.at(0, 0) == -1);
  CHECK(b1.at(1, 0) == 1);
  CHECK((b1 * b2).is_zero());
  auto b0 = boundary_matrix(X, 0);
  CHECK(b0.rows() == 1);
  CHECK(b0.row_sum(0) == 3);
  CHECK(boundary_matrix(X, 2, Coefficients::F2).at(1, 0) == 1);
  CHECK_THROWS_AS(boundary_matrix(X, 3), InvalidInput);
}

TEST_CASE("laplacian examples") {
  auto K4 = SimplicialComplex::from_graph(complete_graph(4));
  auto eig = sym_eigs(laplacian(K4, 0, LaplacianPart::Up));
  REQUIRE(eig.values.size() == 4);
  CHECK(eig.values[0] == doctest::Approx(0).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(eig.values[i] == doctest::Approx(4));

  auto P2 = SimplicialComplex::from_faces(2, {{0, 1}});
  auto L = laplacian(P2, 0, LaplacianPart::Up);
  CHECK(L == SparseMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 1, -1}, {1, 0, -1}, {1, 1, 1}}));

  // Up-laplacian at i=0 is D - A.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto g = rlab::testing::random_graph(8, 0.4, rng);
    auto X = SimplicialComplex::from_graph(g);
    auto up = laplacian(X, 0, LaplacianPart::Up);
    for (int a = 0; a < g.n(); ++a)
      for (int b = 0; b < g.n(); ++b) {
        std::int64_t want = a == b ? g.degree(a) : (g.has_edge(a, b) ? -1 : 0);
        CHECK(up.at(a, b) == want);
      }
  }
}

TEST_CASE("up and down laplacians share nonzero spectra") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto X = random_complex(7, 3, rng);
    for (int i = 0; i < X.dim(); ++i) {
      auto up = sym_eigs(laplacian(X, i, LaplacianPart::Up)).values;
      auto down = sym_eigs(laplacian(X, i + 1, LaplacianPart::Down)).values;
      std::vector<double> a, b;
      for (double x : up)
        if (x > 1e-8) a.push_back(x);
      for (double x : down)
        if (x > 1e-8) b.push_back(x);
      REQUIRE(a.size() == b.size());
      for (std::size_t j = 0; j < a.size(); ++j) CHECK(a[j] == doctest::Approx(b[j]).epsilon(1e-9));
    }
    auto full = laplacian(X, 0, LaplacianPart::Full);
    CHECK(full == laplacian(X, 0, LaplacianPart::Up) + laplacian(X, 0, LaplacianPart::Down));
  }
}

TEST_CASE("betti numbers over F2") {
  CHECK(betti_f2(hollow_triangle(), 0) == 1);
  CHECK(betti_f2(hollow_triangle(), 1) == 1);
  CHECK(betti_f2(solid_triangle(), 0) == 1);
  CHECK(betti_f2(solid_triangle(), 1) == 0);
  CHECK(betti_f2(SimplicialComplex::from_faces(4, {{0, 1}, {2, 3}}), 0) == 2);
  CHECK(betti_f2(SimplicialComplex::from_faces(4, {{0, 1}, {2, 3}}), 0, true) == 1);
  CHECK(betti_f2(solid_triangle(), 0, true) == 0);
  // Boundary of the tetrahedron is a 2-sphere.
  auto S2 = SimplicialComplex::from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(betti_f2(S2, 1) == 0);
  CHECK(betti_f2(S2, 2) == 1);
}

TEST_CASE("clique complexes") {
  auto K4 = complete_graph(4);
  auto X = clique_complex(K4, 2);
  CHECK(X.count(0) == 4);
  CHECK(X.count(1) == 6);
  CHECK(X.count(2) == 4);
  CHECK(X.dim() == 2);
  auto Y = clique_complex(K4, 3);
  CHECK(Y.count(3) == 1);
  auto C5 = clique_complex(rlab::testing::cycle_graph(5), 2);
  CHECK(C5.dim() == 1);
  CHECK(C5.count(1) == 5);
  CHECK_THROWS_AS(clique_complex(complete_graph(12), 5, 100), CapExceeded);

  // Oracle: a triple is a face iff its three edges are present.
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto g = rlab::testing::random_graph(9, 0.5, rng);
    auto Z = clique_complex(g, 3);
    std::size_t tri = 0, tet = 0;
    for (int a = 0; a < 9; ++a)
      for (int b = a + 1; b < 9; ++b)
        for (int c = b + 1; c < 9; ++c) {
          const bool t3 = g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c);
          tri += t3;
          CHECK(Z.contains(v({a, b, c})) == t3);
          for (int d = c + 1; d < 9; ++d)
            tet += t3 && g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d);
        }
    CHECK(Z.count(2) == tri);
    CHECK(Z.count(3) == tet);
  }
}

TEST_CASE("chain complex invariants on random complexes") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> nd(1, 10);
    const int n = nd(rng);
    auto X = random_complex(n, 3, rng);
    for (auto mode : {Coefficients::F2, Coefficients::Real}) {
      for (int i = 0; i < X.dim(); ++i) {
        auto dd = boundary_matrix(X, i, mode) * boundary_matrix(X, i + 1, mode);
        CHECK((mode == Coefficients::F2 ? dd.mod2() : dd).is_zero());
      }
      for (int i = -1; i + 1 < X.dim(); ++i) {
        auto dd = coboundary_matrix(X, i + 1, mode) * coboundary_matrix(X, i, mode);
        CHECK((mode == Coefficients::F2 ? dd.mod2() : dd).is_zero());
      }
    }
    for (int i = 0; i <= X.dim(); ++i) {
      // rank-nullity for delta_i : C^i -> C^{i+1}
      const int rank = i < X.dim() ? rank_f2(coboundary_matrix(X, i, Coefficients::F2)) : 0;
      const int rank_prev = rank_f2(coboundary_matrix(X, i - 1, Coefficients::F2));
      const int kernel = static_cast<int>(X.count(i)) - rank;
      CHECK(kernel - rank_prev == betti_f2(X, i, true));
      CHECK(betti_f2(X, i) == homology_f2(X, i));
      CHECK(betti_f2(X, i, true) == homology_f2(X, i, true));
    }
    auto C = cone(X);
    CHECK(betti_f2(C, 0) == 1);
    for (int i = 1; i <= C.dim(); ++i) CHECK(betti_f2(C, i) == 0);
  }
}

TEST_CASE("bit matrix rref") {
  BitMatrix m(3, 70);
  m.set(0, 65, true);
  m.set(1, 65, true);
  m.set(1, 3, true);
  m.set(2, 3, true);
  CHECK(m.rank() == 2);
  auto piv = m.rref();
  CHECK(piv == std::vector<int>{3, 65});
  CHECK(m.transpose().transpose().get(0, 3));
}
