#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rlab/complex.hpp"
#include "rlab/graph.hpp"

namespace rlab {

/// Exact nonnegative ratio num/den (den > 0).
struct Ratio {
  std::int64_t num = 0, den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator<(const Ratio& o) const;
  bool operator==(const Ratio& o) const;
};

/// Minimizing vertex subset or partition. For graphs `parts` holds A and its
/// complement; `count` is |E(A, A^c)| or |F(A_0, ..., A_d)|.
struct PartitionWitness {
  std::vector<std::vector<int>> parts;
  std::int64_t count = 0;
  Ratio ratio;
};

struct GraphCheeger {
  Ratio h, hbar;
  PartitionWitness h_witness, hbar_witness;
};

/// h = min n|E(A,A^c)|/(|A||A^c|) and hbar = min |E(A,A^c)|/|A| with
/// |A| <= n/2, by enumeration (n <= 24). Ties go to the subset with the
/// smallest indicator (vertex n-1 most significant).
GraphCheeger cheeger_graph(const Graph& g);

/// min n|F(A_0..A_d)| / prod |A_i| over partitions into d+1 nonempty parts
/// (d = dim X, n <= 14).
PartitionWitness cheeger_highdim(const SimplicialComplex& X);

/// |F(A_0, ..., A_d)|: top faces with exactly one vertex in each set.
std::int64_t transversal_count(const SimplicialComplex& X, const std::vector<std::vector<int>>& sets);

/// | |F| - |X^(d)| prod |A_i| / C(n, d+1) | for disjoint sets.
double discrepancy(const SimplicialComplex& X, const std::vector<std::vector<int>>& sets);

struct CochainWitness {
  std::vector<int> f;       // support of f, as (i-1)-face indices
  std::vector<int> shift;   // support of h with ||f + delta h|| = ||[f]||
  std::int64_t coset_norm = 0;
  std::int64_t delta_norm = 0;
};

struct CoboundaryExpansion {
  Ratio E;            // min ||delta f|| / ||[f]||
  double E_normalized = 0;  // E * |X^(i-1)| / |X^(i)|
  CochainWitness witness;
  bool cohomology_vanishes = false;
};

/// Exact F2-coboundary expansion in dimension i (1 <= i <= dim X + 1), by
/// enumeration of all (i-1)-cochains; needs |X^(i-1)|, |X^(i-2)| <= 22.
CoboundaryExpansion coboundary_expansion(const SimplicialComplex& X, int i);

struct Filling {
  Ratio nu;  // max ||f + Z^{i-1}|| / ||delta f||
  CochainWitness witness;  // shift unused; coset_norm is the distance to Z
};

Filling filling(const SimplicialComplex& X, int i);

struct CheegerReport {
  int d = 0;
  int n = 0;
  double h = 0;
  int k = 0;                     // max degree of a (d-1)-cell
  double lambda = 0;             // spectral gap in dimension d-1
  std::optional<double> mu1;     // regular graphs only; lambda = k - mu1
  double lower = 0, upper = 0;   // lower <= lambda <= upper
  bool pass = false;
  double tol = 1e-9;
};

/// Cheeger inequalities: for d = 1, h^2/(8k) <= lambda_0 <= h (lambda_0 =
/// k - mu1 for regular graphs); for d >= 2 the high-dimensional form, which
/// needs a complete (d-1)-skeleton.
CheegerReport validate_cheeger_inequalities(const SimplicialComplex& X, double tol = 1e-9);

struct MixingTrial {
  std::vector<int> sizes;
  std::int64_t count = 0;
  double deviation = 0, bound = 0;
  bool pass = false;
};

struct MixingReport {
  int d = 0;
  double k = 0;       // average degree of a (d-1)-cell
  double mu0 = 0;     // spectral radius of kI - Delta_{d-1} on Z_{d-1}
  std::vector<MixingTrial> trials;
  // Graph mixing lemma with mu0 from the adjacency spectrum; connected
  // regular graphs only.
  std::optional<double> graph_mu0;
  std::vector<MixingTrial> graph_trials;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  bool pass = false;
};

MixingReport validate_mixing(const SimplicialComplex& X, int trials, std::uint64_t seed = 0, double tol = 1e-9);

using Point2 = std::array<double, 2>;

struct OverlapDepth {
  std::int64_t depth = 0;     // triangles containing the witness
  std::int64_t triangles = 0;
  double fraction = 0;
  Point2 witness{};
  bool jittered = false;
};

/// Max over z of the fraction of 2-faces whose closed image contains z.
/// Degenerate embeddings (collinear vertex triples) are perturbed by a
/// seeded jitter of relative size 1e-9.
OverlapDepth overlap_depth(const SimplicialComplex& X, const std::vector<Point2>& embedding, std::uint64_t seed = 0);

struct OverlapEstimate {
  double upper_bound = 1;  // min depth fraction over random embeddings
  int worst_trial = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> fractions;
};

/// Random embeddings into the unit square; the minimum is an upper bound on
/// the geometric overlap constant.
OverlapEstimate overlap_estimate(const SimplicialComplex& X, int trials, std::uint64_t seed = 0);

}  // namespace rlab
