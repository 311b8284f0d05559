#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rlab/graph.hpp"
#include "rlab/sparse.hpp"

namespace rlab {

/// Finite simplicial complex on vertices 0..n-1. Faces of each dimension are
/// sorted vertex tuples stored flat in lexicographic order; the empty face
/// (dimension -1) is implicit and always present.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Downward closure of the given faces; every vertex 0..n-1 is a 0-face.
  static SimplicialComplex from_faces(int n, const std::vector<std::vector<int>>& faces);
  static SimplicialComplex from_graph(const Graph& g);
  /// Faces already closed and sorted per dimension (flat arrays, dimension
  /// k entries of length k+1). Verified.
  static SimplicialComplex from_sorted_levels(int n, std::vector<std::vector<int>> levels);

  int vertex_count() const { return n_; }
  /// Top dimension (-1 for the empty complex).
  int dim() const { return static_cast<int>(levels_.size()) - 1; }
  std::size_t count(int k) const;
  std::span<const int> face(int k, std::size_t i) const;
  std::vector<int> face_vec(int k, std::size_t i) const;
  std::optional<std::size_t> index_of(int k, std::span<const int> face) const;
  bool contains(std::span<const int> face) const;
  const std::vector<int>& flat(int k) const { return levels_.at(k); }
  Graph skeleton() const;
  /// Every (k+1)-subset of the vertices is a face.
  bool has_complete_skeleton(int k) const;
  /// Number of (k+1)-faces containing the given k-face.
  std::vector<int> up_degrees(int k) const;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> levels_;
};

/// Complete complex on n vertices up to dimension max_dim.
SimplicialComplex complete_complex(int n, int max_dim);

/// All cliques with at most max_dim+1 vertices. CapExceeded when the total
/// face count passes `cap`.
SimplicialComplex clique_complex(const Graph& g, int max_dim, std::size_t cap = 50'000'000);

/// Oriented incidence [F:G] for sorted faces: (-1)^l when F minus G is the
/// vertex at position l of F, 0 when G is not a facet of F. Throws on a
/// dimension mismatch.
int incidence(std::span<const int> F, std::span<const int> G);

enum class Coefficients { F2, Real };

/// |X^(i-1)| x |X^(i)| matrix of incidence numbers (entries mod 2 for F2).
/// i ranges over 0..dim; row 0 of the i=0 matrix is the empty face.
SparseMatrix boundary_matrix(const SimplicialComplex& X, int i, Coefficients mode = Coefficients::Real);
/// delta_i : C^i -> C^{i+1}, the transpose of boundary_matrix(i+1); i >= -1.
SparseMatrix coboundary_matrix(const SimplicialComplex& X, int i, Coefficients mode = Coefficients::Real);

enum class LaplacianPart { Up, Down, Full };
SparseMatrix laplacian(const SimplicialComplex& X, int i, LaplacianPart part);

/// Dense bit-packed matrix over F_2.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);
  static BitMatrix from_sparse(const SparseMatrix& m);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
  void set(int r, int c, bool v);
  const std::uint64_t* row(int r) const { return bits_.data() + static_cast<std::size_t>(r) * words_; }
  std::uint64_t* row(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_; }
  int words() const { return words_; }
  int rank() const;
  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref();
  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& o) const;
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

int rank_f2(const SparseMatrix& m);

/// dim H^i(X; F_2) = dim ker delta_i - rank delta_{i-1}. Unreduced by default
/// (a connected complex has b_0 = 1); `reduced` includes delta_{-1}.
int betti_f2(const SimplicialComplex& X, int i, bool reduced = false);
/// dim H_i(X; F_2) computed from the boundary maps (same conventions).
int homology_f2(const SimplicialComplex& X, int i, bool reduced = false);

}  // namespace rlab
