#include <cmath>
#include <random>

#include "doctest.h"
#include "rlab/errors.hpp"
#include "rlab/expansion.hpp"
#include "rlab/spectra.hpp"
#include "support.hpp"

using namespace rlab;
using rlab::testing::complete_graph;
using rlab::testing::cycle_graph;
using rlab::testing::random_graph;

namespace {

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<std::vector<int>> faces;
  for (int k = 0; k <= a.dim(); ++k)
    for (std::size_t i = 0; i < a.count(k); ++i) faces.push_back(a.face_vec(k, i));
  for (int k = 0; k <= b.dim(); ++k)
    for (std::size_t i = 0; i < b.count(k); ++i) {
      auto f = b.face_vec(k, i);
      for (int& v : f) v += a.vertex_count();
      faces.push_back(f);
    }
  return SimplicialComplex::from_faces(a.vertex_count() + b.vertex_count(), faces);
}

// Plain subset loops, no Gray code.
std::pair<double, double> naive_cheeger(const Graph& g) {
  const int n = g.n();
  double h = 1e300, hbar = 1e300;
  for (std::uint32_t a = 1; a + 1 < (1u << n); ++a) {
    int cut = 0, s = std::popcount(a);
    for (auto [u, v] : g.edges()) cut += ((a >> u) & 1u) != ((a >> v) & 1u);
    h = std::min(h, static_cast<double>(n) * cut / (s * (n - s)));
    if (2 * s <= n) hbar = std::min(hbar, static_cast<double>(cut) / s);
  }
  return {h, hbar};
}

// min ||delta f|| / min_h ||f + delta h|| by direct matrix-vector products.
double naive_expansion(const SimplicialComplex& X, int i, bool fill) {
  auto D = coboundary_matrix(X, i - 1, Coefficients::F2);
  auto P = coboundary_matrix(X, i - 2, Coefficients::F2);
  const int N = static_cast<int>(X.count(i - 1));
  auto apply = [](const SparseMatrix& m, std::uint32_t x) {
    std::vector<int> y(static_cast<std::size_t>(m.rows()), 0);
    for (int r = 0; r < m.rows(); ++r)
      for (auto k = m.row_ptr()[r]; k < m.row_ptr()[r + 1]; ++k) y[r] ^= (x >> m.col_index()[k]) & 1u;
    return y;
  };
  auto weight = [](const std::vector<int>& v) { return std::count(v.begin(), v.end(), 1); };
  auto to_mask = [](const std::vector<int>& v) {
    std::uint32_t m = 0;
    for (std::size_t j = 0; j < v.size(); ++j) m |= static_cast<std::uint32_t>(v[j]) << j;
    return m;
  };
  std::vector<std::uint32_t> B, Zs;
  for (std::uint32_t h = 0; h < (1u << P.cols()); ++h) B.push_back(to_mask(apply(P, h)));
  for (std::uint32_t z = 0; z < (1u << N); ++z)
    if (D.rows() == 0 || weight(apply(D, z)) == 0) Zs.push_back(z);
  double best = fill ? -1 : 1e300;
  for (std::uint32_t f = 0; f < (1u << N); ++f) {
    const double df = D.rows() ? static_cast<double>(weight(apply(D, f))) : 0.0;
    int dist = 1 << 30;
    for (auto s : fill ? Zs : B) dist = std::min(dist, std::popcount(f ^ s));
    if (dist == 0) continue;
    if (fill)
      best = std::max(best, dist / df);
    else
      best = std::min(best, df / dist);
  }
  return best;
}

double naive_highdim(const SimplicialComplex& X) {
  const int d = X.dim(), n = X.vertex_count(), parts = d + 1;
  double best = 1e300;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= parts;
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(parts));
    for (int v = 0; v < n; ++v, c /= parts) sets[c % parts].push_back(v);
    bool ok = true;
    double prod = 1;
    for (auto& s : sets) {
      ok = ok && !s.empty();
      prod *= static_cast<double>(s.size());
    }
    if (!ok) continue;
    best = std::min(best, n * static_cast<double>(transversal_count(X, sets)) / prod);
  }
  return best;
}

}  // namespace

TEST_CASE("graph Cheeger constants") {
  for (int n = 2; n <= 8; ++n) CHECK(cheeger_graph(complete_graph(n)).h == Ratio{n, 1});
  auto c4 = cheeger_graph(cycle_graph(4));
  CHECK(c4.h == Ratio{2, 1});
  CHECK(c4.h_witness.parts[0] == std::vector<int>{0, 1});
  auto disc = cheeger_graph(Graph::from_edges(4, {{0, 1}, {2, 3}}));
  CHECK(disc.h.num == 0);
  CHECK(disc.hbar.num == 0);
  CHECK_THROWS_AS(cheeger_graph(Graph(25)), CapExceeded);

  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> nd(2, 10);
    auto g = random_graph(nd(rng), 0.45, rng);
    auto c = cheeger_graph(g);
    auto [h, hbar] = naive_cheeger(g);
    CHECK(c.h.value() == doctest::Approx(h));
    CHECK(c.hbar.value() == doctest::Approx(hbar));
    CHECK(c.hbar.value() <= c.h.value() + 1e-12);
    CHECK(c.h.value() <= 2 * c.hbar.value() + 1e-12);
    // The witness reproduces the value.
    const auto& A = c.h_witness.parts[0];
    std::int64_t cut = 0;
    for (auto [u, v] : g.edges())
      cut += std::count(A.begin(), A.end(), u) != std::count(A.begin(), A.end(), v);
    CHECK(cut == c.h_witness.count);
    CHECK(Ratio{g.n() * c.h_witness.count, static_cast<std::int64_t>(A.size() * (g.n() - A.size()))} == c.h);
  }
}

TEST_CASE("high-dimensional Cheeger constant") {
  CHECK(cheeger_highdim(complete_complex(3, 2)).ratio == Ratio{3, 1});
  auto S2 = SimplicialComplex::from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  auto w = cheeger_highdim(S2);
  CHECK(w.ratio == Ratio{4, 1});
  // Missing edge {0,1}: zero.
  auto gap = SimplicialComplex::from_faces(4, {{0, 2, 3}, {1, 2, 3}});
  CHECK(cheeger_highdim(gap).ratio.num == 0);

  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    std::uniform_int_distribution<int> nd(3, 7);
    auto X = rlab::testing::random_2complex_complete_skeleton(nd(rng), 0.5, rng);
    if (X.dim() < 2) continue;
    auto c = cheeger_highdim(X);
    CHECK(c.ratio.value() == doctest::Approx(naive_highdim(X)));
    CHECK(transversal_count(X, c.parts) == c.count);
  }
  // d = 1 agrees with the graph constant.
  for (int t = 0; t < 30; ++t) {
    auto g = random_graph(7, 0.5, rng);
    if (g.edge_count() == 0) continue;
    CHECK(cheeger_highdim(SimplicialComplex::from_graph(g)).ratio == cheeger_graph(g).h);
  }
}

TEST_CASE("discrepancy") {
  auto K = complete_complex(6, 2);
  CHECK(discrepancy(K, {{0, 1}, {2}, {3, 4, 5}}) == doctest::Approx(0));
  auto S2 = SimplicialComplex::from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(discrepancy(S2, {{0}, {1}, {2}}) == doctest::Approx(0));
  CHECK(discrepancy(S2, {{0}, {}, {2}}) == doctest::Approx(0));
  CHECK_THROWS_AS(discrepancy(S2, {{0}, {0}, {2}}), InvalidInput);
  std::mt19937_64 rng(9);
  for (int n = 3; n <= 8; ++n)
    for (int t = 0; t < 10; ++t) {
      std::vector<std::vector<int>> sets(3);
      std::uniform_int_distribution<int> pick(0, 3);
      for (int v = 0; v < n; ++v)
        if (int l = pick(rng); l < 3) sets[l].push_back(v);
      CHECK(discrepancy(complete_complex(n, 2), sets) == doctest::Approx(0).epsilon(1e-12));
    }
}

TEST_CASE("coboundary expansion examples") {
  auto K4 = SimplicialComplex::from_graph(complete_graph(4));
  auto e = coboundary_expansion(K4, 1);
  CHECK(e.E == Ratio{2, 1});
  CHECK(e.E_normalized == doctest::Approx(4.0 / 3.0));
  CHECK(e.cohomology_vanishes);

  auto C4 = complete_complex(4, 2);
  auto e2 = coboundary_expansion(C4, 2);
  CHECK(e2.E.value() >= 4.0 / 3.0);
  CHECK(e2.E.value() == doctest::Approx(naive_expansion(C4, 2, false)));

  auto disc = SimplicialComplex::from_faces(4, {{0, 1}, {2, 3}});
  auto z = coboundary_expansion(disc, 1);
  CHECK(z.E.num == 0);
  CHECK_FALSE(z.cohomology_vanishes);
  CHECK(z.witness.delta_norm == 0);
  CHECK(z.witness.coset_norm > 0);

  CHECK_THROWS_AS(coboundary_expansion(K4, 3), InvalidInput);
  CHECK_THROWS_AS(coboundary_expansion(SimplicialComplex::from_graph(complete_graph(8)), 2), CapExceeded);
}

TEST_CASE("complete complexes expand by at least n/(i+1)") {
  for (int n = 2; n <= 7; ++n)
    for (int i = 1; i <= 2 && i < n; ++i) {
      auto e = coboundary_expansion(complete_complex(n, i), i);
      CHECK(e.E.value() >= static_cast<double>(n) / (i + 1) - 1e-12);
      CHECK(e.E_normalized >= 1 - 1e-12);
    }
}

TEST_CASE("coboundary expansion against brute force") {
  std::mt19937_64 rng(31);
  int positive = 0, zero = 0;
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<int> nd(2, 10);
    auto g = random_graph(nd(rng), 0.4, rng);
    auto X = SimplicialComplex::from_graph(g);
    auto e = coboundary_expansion(X, 1);
    CHECK(e.E == cheeger_graph(g).hbar);
    CHECK((e.E.num > 0) == (betti_f2(X, 0, true) == 0));
  }
  for (int t = 0; t < 120; ++t) {
    std::uniform_int_distribution<int> nd(3, 6);
    auto X = rlab::testing::random_complex(nd(rng), 2, rng);
    for (int i = 1; i <= std::min(2, X.dim() + 1); ++i) {
      if (X.count(i - 1) > 12) continue;
      CoboundaryExpansion e;
      try {
        e = coboundary_expansion(X, i);
      } catch (const InvalidInput&) {
        continue;
      }
      CHECK(e.E.value() == doctest::Approx(naive_expansion(X, i, false)));
      const bool h_zero = betti_f2(X, i - 1, true) == 0;
      CHECK((e.E.num > 0) == h_zero);
      (h_zero ? positive : zero)++;
      // Witness: ||f + delta h|| equals the coset norm.
      auto P = coboundary_matrix(X, i - 2, Coefficients::F2);
      std::vector<int> g(X.count(i - 1), 0);
      for (int j : e.witness.f) g[j] ^= 1;
      for (int hcol : e.witness.shift)
        for (int r = 0; r < P.rows(); ++r) g[r] ^= static_cast<int>(P.at(r, hcol) & 1);
      CHECK(std::count(g.begin(), g.end(), 1) == e.witness.coset_norm);
      if (h_zero) {
        auto fl = filling(X, i);
        CHECK(fl.nu.value() == doctest::Approx(1.0 / e.E.value()));
      }
    }
  }
  MESSAGE("vanishing cohomology " << positive << ", nonvanishing " << zero);
  CHECK(zero > 0);
  CHECK(positive > 0);
}

TEST_CASE("filling") {
  auto K3 = SimplicialComplex::from_graph(complete_graph(3));
  auto f = filling(K3, 1);
  CHECK(f.nu == Ratio{1, 2});
  CHECK(f.nu.value() == doctest::Approx(1.0 / coboundary_expansion(K3, 1).E.value()));
  auto two = disjoint_union(K3, K3);
  auto f2 = filling(two, 1);
  CHECK(f2.nu == Ratio{1, 2});
  CHECK(f2.nu.value() == doctest::Approx(naive_expansion(two, 1, true)));
  auto mixed = disjoint_union(K3, SimplicialComplex::from_graph(cycle_graph(6)));
  auto f3 = filling(mixed, 1);
  CHECK(f3.nu == Ratio{3, 2});
  CHECK(f3.nu.value() == doctest::Approx(naive_expansion(mixed, 1, true)));
  CHECK_THROWS_AS(filling(K3, 3), InvalidInput);
}

TEST_CASE("cheeger inequality validator") {
  auto k4 = validate_cheeger_inequalities(SimplicialComplex::from_graph(complete_graph(4)));
  CHECK(k4.pass);
  CHECK(k4.h == doctest::Approx(4));
  CHECK(k4.k == 3);
  CHECK(*k4.mu1 == doctest::Approx(-1));
  CHECK(k4.lower == doctest::Approx(16.0 / 24.0));
  auto c4 = validate_cheeger_inequalities(SimplicialComplex::from_graph(cycle_graph(4)));
  CHECK(c4.pass);
  CHECK(c4.h == doctest::Approx(2));
  CHECK(*c4.mu1 == doctest::Approx(0).epsilon(1e-12));
  CHECK_THROWS_AS(validate_cheeger_inequalities(SimplicialComplex::from_faces(4, {{0, 1, 2}})), InvalidInput);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int> nd(3, 9);
    auto X = rlab::testing::random_2complex_complete_skeleton(nd(rng), 0.5, rng);
    if (X.dim() < 2) continue;
    CHECK(validate_cheeger_inequalities(X).pass);
  }
}

TEST_CASE("mixing validator") {
  auto rep = validate_mixing(complete_complex(6, 2), 100, 1);
  CHECK(rep.pass);
  CHECK(rep.trials.size() == 100);
  auto k4 = SimplicialComplex::from_graph(complete_graph(4));
  auto r4 = validate_mixing(k4, 50, 2);
  CHECK(r4.pass);
  REQUIRE(r4.graph_mu0.has_value());
  CHECK(*r4.graph_mu0 == doctest::Approx(1));
  CHECK(r4.mu0 == doctest::Approx(1));
  // Singletons: E in {0,1}, expected 3/4.
  auto sets = std::vector<std::vector<int>>{{0}, {1}};
  CHECK(std::abs(transversal_count(k4, sets) - 0.75) <= 1.0);
  // Identical seeds, identical trials.
  auto again = validate_mixing(complete_complex(6, 2), 100, 1);
  for (std::size_t t = 0; t < rep.trials.size(); ++t) CHECK(rep.trials[t].sizes == again.trials[t].sizes);
}

TEST_CASE("overlap depth") {
  auto one = SimplicialComplex::from_faces(3, {{0, 1, 2}});
  auto d1 = overlap_depth(one, {{{0, 0}}, {{1, 0}}, {{0, 1}}});
  CHECK(d1.fraction == 1);
  auto K4 = complete_complex(4, 2);
  auto sq = overlap_depth(K4, {{{0, 0}}, {{1, 0}}, {{1, 1}}, {{0, 1}}});
  CHECK(sq.fraction == 1);
  auto two = SimplicialComplex::from_faces(6, {{0, 1, 2}, {3, 4, 5}});
  auto far = overlap_depth(two, {{{0, 0}}, {{1, 0}}, {{0, 1}}, {{10, 10}}, {{11, 10}}, {{10, 11}}});
  CHECK(far.fraction == 0.5);
  CHECK_THROWS_AS(overlap_depth(one, {{{0, 0}}, {{0, 0}}, {{0, 1}}}), InvalidInput);
  auto line = overlap_depth(one, {{{0, 0}}, {{1, 0}}, {{2, 0}}});
  CHECK(line.jittered);

  // Affine invariance on random embeddings.
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-1, 1);
  auto K7 = complete_complex(7, 2);
  for (int t = 0; t < 20; ++t) {
    std::vector<Point2> p(7);
    for (auto& x : p) x = {u(rng), u(rng)};
    const double a = u(rng) + 2, b = u(rng), c = u(rng), d = u(rng) + 2, e = 5 * u(rng), f = 5 * u(rng);
    std::vector<Point2> q;
    for (auto& x : p) q.push_back({a * x[0] + b * x[1] + e, c * x[0] + d * x[1] + f});
    CHECK(std::abs(overlap_depth(K7, p).fraction - overlap_depth(K7, q).fraction) <= 1e-9);
  }
  auto est = overlap_estimate(K7, 50, 3);
  CHECK(est.upper_bound > 0);
  CHECK(est.upper_bound <= 1);
  CHECK(overlap_estimate(one, 5).upper_bound == 1);
}
