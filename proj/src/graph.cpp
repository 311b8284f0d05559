#include "rlab/graph.hpp"

#include <algorithm>
#include <deque>

#include "rlab/errors.hpp"

namespace rlab {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw InvalidInput("negative vertex count");
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u == v) throw InvalidInput("loops are not allowed");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

Graph Graph::from_neighbor_table(const std::vector<std::vector<int>>& nbrs) {
  Graph g(static_cast<int>(nbrs.size()));
  for (std::size_t v = 0; v < nbrs.size(); ++v) {
    auto a = nbrs[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw VerificationFailure("repeated neighbor (multi-edge)");
    for (int u : a)
      if (u == static_cast<int>(v)) throw VerificationFailure("loop in neighbor table");
    g.adj_[v] = std::move(a);
  }
  for (int v = 0; v < g.n(); ++v)
    for (int u : g.adj_[v])
      if (!g.has_edge(u, v)) throw VerificationFailure("neighbor table is not symmetric");
  return g;
}

int Graph::max_degree() const {
  int m = 0;
  for (const auto& a : adj_) m = std::max(m, static_cast<int>(a.size()));
  return m;
}

std::size_t Graph::edge_count() const {
  std::size_t s = 0;
  for (const auto& a : adj_) s += a.size();
  return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) e.emplace_back(u, v);
  return e;
}

bool Graph::has_edge(int u, int v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

std::optional<int> Graph::regular_degree() const {
  if (adj_.empty()) return std::nullopt;
  const int k = degree(0);
  for (int v = 1; v < n(); ++v)
    if (degree(v) != k) return std::nullopt;
  return k;
}

std::vector<int> Graph::components() const {
  std::vector<int> label(adj_.size(), -1);
  int next = 0;
  std::deque<int> queue;
  for (int s = 0; s < n(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : adj_[v])
        if (label[u] < 0) {
          label[u] = next;
          queue.push_back(u);
        }
    }
    ++next;
  }
  return label;
}

bool Graph::is_connected() const {
  auto c = components();
  return std::all_of(c.begin(), c.end(), [](int l) { return l == 0; });
}

std::optional<std::vector<int>> Graph::bipartition() const {
  std::vector<int> color(adj_.size(), -1);
  std::deque<int> queue;
  for (int s = 0; s < n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : adj_[v]) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

std::optional<int> Graph::girth() const {
  int best = -1;
  std::vector<int> dist(adj_.size()), parent(adj_.size());
  for (int s = 0; s < n(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (best >= 0 && 2 * dist[v] + 1 >= best) break;
      for (int u : adj_[v]) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          queue.push_back(u);
        } else if (u != parent[v]) {
          int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

SparseMatrix Graph::adjacency() const {
  std::vector<std::tuple<int, int, std::int64_t>> t;
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u]) t.emplace_back(u, v, 1);
  return SparseMatrix::from_triplets(n(), n(), std::move(t));
}

}  // namespace rlab
