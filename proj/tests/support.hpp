#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "rlab/complex.hpp"
#include "rlab/graph.hpp"

namespace rlab::testing {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

/// Uniform-ish k-regular simple graph by the pairing model with rejection.
inline Graph random_regular_graph(int n, int k, std::mt19937_64& rng) {
  if (2 * k > n - 1) {
    // Dense case: complement of a sparse regular graph (rejection would stall).
    auto c = random_regular_graph(n, n - 1 - k, rng);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!c.has_edge(u, v)) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
  }
  for (;;) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
      for (int j = 0; j < k; ++j) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<int, int>> e;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      auto [a, b] = std::minmax(stubs[i], stubs[i + 1]);
      if (a == b || std::find(e.begin(), e.end(), std::make_pair(a, b)) != e.end()) ok = false;
      e.emplace_back(a, b);
    }
    if (ok) return Graph::from_edges(n, e);
  }
}

/// Downward closure of random faces of dimension up to max_dim.
inline SimplicialComplex random_complex(int n, int max_dim, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nfaces(1, 2 * n), dimd(0, max_dim);
  std::vector<int> verts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) verts[i] = i;
  std::vector<std::vector<int>> faces;
  const int m = nfaces(rng);
  for (int i = 0; i < m; ++i) {
    std::shuffle(verts.begin(), verts.end(), rng);
    const int k = std::min(dimd(rng), n - 1);
    std::vector<int> f(verts.begin(), verts.begin() + k + 1);
    std::sort(f.begin(), f.end());
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::from_faces(n, faces);
}

/// Complete graph on n vertices plus each triangle with probability p.
inline SimplicialComplex random_2complex_complete_skeleton(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<int>> faces;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      faces.push_back({a, b});
      for (int c = b + 1; c < n; ++c)
        if (coin(rng)) faces.push_back({a, b, c});
    }
  return SimplicialComplex::from_faces(n, faces);
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph::from_edges(n, e);
}

}  // namespace rlab::testing
