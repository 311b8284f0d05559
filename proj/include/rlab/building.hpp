#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rlab/algebra/group.hpp"
#include "rlab/algebra/matrix.hpp"
#include "rlab/complex.hpp"
#include "rlab/sparse.hpp"

namespace rlab {

/// Class of the lattice spanned by the columns of an integral matrix over
/// F_q[[y]], in column Hermite form: upper triangular, diagonal y^{a_j},
/// entry (r, c) a polynomial of degree < a_r, scaled by a power of y so that
/// some entry is a unit.
class LatticeClass {
 public:
  LatticeClass() = default;

  int dim() const { return static_cast<int>(a_.size()); }
  const std::vector<int>& exponents() const { return a_; }
  /// Coefficients (low to high, length a_r) of entry (r, c), r < c.
  const std::vector<Elem>& entry(int r, int c) const;
  /// sum a_j mod d.
  int color() const;
  /// The canonical matrix at the given precision (must exceed max a_j).
  SeriesMatrix matrix(const FieldPtr& field, int precision) const;
  const std::vector<std::uint32_t>& key() const { return key_; }
  bool operator==(const LatticeClass& o) const { return key_ == o.key_; }
  bool operator<(const LatticeClass& o) const { return key_ < o.key_; }
  std::string to_string() const;

 private:
  friend LatticeClass lattice_class(const SeriesMatrix& g);
  std::vector<int> a_;
  std::vector<std::vector<Elem>> upper_;  // row-major over r < c
  std::vector<std::uint32_t> key_;
};

/// Canonical class of g O^d for g integral and invertible over F_q((y)).
/// InsufficientPrecision when the truncation cannot decide the form.
LatticeClass lattice_class(const SeriesMatrix& g);

/// nu_y(det g) mod d.
int vertex_color(const SeriesMatrix& g);

enum class AdjacencyKind { Same, Adjacent, NotAdjacent };

struct Adjacency {
  AdjacencyKind kind = AdjacencyKind::NotAdjacent;
  int color = 0;  // for Adjacent: the number of unit elementary divisors shifted by one
};

/// Relation between [O^d] and [g O^d] read off the Smith valuations of g.
Adjacency adjacency_type(const SeriesMatrix& g);

std::string to_string(const Adjacency& a);

/// The matrices h_W = [basis of W | y e_j for non-pivot j], one per proper
/// nonzero subspace W of F_q^d (reduced echelon bases, ordered by dimension,
/// pivot set, then entries), paired with the color d - dim W. Right
/// multiplication of a representative of [L] by every h_W lists the
/// neighbors of [L].
std::vector<std::pair<SeriesMatrix, int>> neighbor_moves(const FieldPtr& fq, int d, int precision);

struct BuildingBall {
  int d = 0, q = 0, r = 0;
  std::vector<LatticeClass> classes;   // BFS order, center first
  std::vector<int> distance;           // gallery distance from the center
  std::vector<int> tau;                // vertex colors
  SimplicialComplex complex;           // clique complex up to dimension d-1
  /// Color of the directed edge u -> v for each edge (u < v) of the 1-skeleton.
  std::map<std::pair<int, int>, int> edge_color;
  std::vector<std::size_t> sphere_sizes;
};

/// All lattice classes within distance r of [O^d], with the induced clique
/// complex. CapExceeded past `cap` vertices.
BuildingBall building_ball(int d, std::uint64_t q, int r, std::size_t cap = 1'000'000);

/// Vertex and edge counts of the link of v.
struct LinkCounts {
  std::size_t vertices = 0, edges = 0;
};
LinkCounts link_counts(const SimplicialComplex& X, int v);

/// A_k[x][x s] += 1 for s in sigma[k-1]; sigma.size() = d-1. Checks closure,
/// Sigma_{d-k} = Sigma_k^{-1} as sets, pairwise commutation and
/// A_k^T = A_{d-k}.
std::vector<SparseMatrix> hecke_matrices(const MatrixGroup& group, const std::vector<std::vector<ProjMatrix>>& sigma);

/// Same from precomputed right-multiplication tables (table[k][x][s]).
std::vector<SparseMatrix> hecke_from_tables(int n, const std::vector<std::vector<std::vector<int>>>& tables);

}  // namespace rlab
