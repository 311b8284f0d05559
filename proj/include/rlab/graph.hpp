#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rlab/sparse.hpp"

namespace rlab {

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}
  /// Rejects loops and out-of-range endpoints; duplicate edges collapse.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  /// Symmetric neighbor table (e.g. a Cayley graph); rejects loops, asymmetric
  /// tables and repeated neighbors.
  static Graph from_neighbor_table(const std::vector<std::vector<int>>& nbrs);

  int n() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  std::size_t edge_count() const;
  /// Edges as sorted (u < v) pairs in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  bool has_edge(int u, int v) const;
  /// Common degree when regular.
  std::optional<int> regular_degree() const;
  bool is_connected() const;
  /// Component label per vertex (labels in order of first vertex).
  std::vector<int> components() const;
  /// 2-coloring when bipartite.
  std::optional<std::vector<int>> bipartition() const;
  /// Length of a shortest cycle, nullopt for forests.
  std::optional<int> girth() const;
  SparseMatrix adjacency() const;

 private:
  std::vector<std::vector<int>> adj_;
};

}  // namespace rlab
