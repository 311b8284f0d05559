#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "rlab/complex.hpp"
#include "rlab/graph.hpp"
#include "rlab/sparse.hpp"

namespace rlab {

using cplx = std::complex<double>;
using u128 = unsigned __int128;

struct SymEigResult {
  std::vector<double> values;  // ascending
  double max_residual = 0;     // max ||M v - lambda v||
  double norm = 0;             // spectral norm estimate max |lambda|
  Eigen::MatrixXd vectors;     // filled when requested
};

/// All eigenvalues of a real symmetric matrix (symmetry within 1e-12 or
/// InvalidInput), each with residual checked against 1e-9 * ||M||.
SymEigResult sym_eigs(const Eigen::MatrixXd& m, bool keep_vectors = false);
SymEigResult sym_eigs(const SparseMatrix& m, bool keep_vectors = false);

Eigen::MatrixXd to_dense(const SparseMatrix& m);

enum class EigenTag { Trivial, Tempered, Violating };
std::string to_string(EigenTag t);

struct SpectrumReport {
  std::vector<cplx> eigenvalues;  // ascending by real part, then imaginary part
  double residual_bound = 0;
  std::vector<EigenTag> tags;
};

struct GraphVerdict {
  bool ramanujan = false;
  int k = 0;
  double bound = 0;  // 2 sqrt(k-1)
  bool bipartite = false;
  std::optional<double> offending;
  double mu = 0, mu0 = 0, mu1 = 0;
  SpectrumReport spectrum;
};

/// Ramanujan test for a connected k-regular graph with k >= 3 (InvalidInput
/// otherwise): every eigenvalue is k, -k (bipartite only) or |lambda| <= 2 sqrt(k-1) + tol.
GraphVerdict is_ramanujan_graph(const Graph& g, double tol = 1e-9);

struct MuValues {
  double mu, mu0, mu1;
};
/// One copy of k (and of -k when bipartite) is removed before the maxima.
/// Needs a connected regular graph.
MuValues mu_values(const Graph& g);
MuValues mu_values_from_spectrum(const std::vector<double>& ascending, int k, bool bipartite);

/// Spectrum of Delta_i restricted to Z_i = ker(boundary_i), ascending.
std::vector<double> restricted_laplacian_spectrum(const SimplicialComplex& X, int i);
/// lambda_i(X) = min of that spectrum.
double spectral_gap(const SimplicialComplex& X, int i);

/// Number of codimension-k subspaces of F_q^d; CapExceeded past 128 bits.
u128 gaussian_binomial(int d, int k, std::uint64_t q);
std::string u128_to_string(u128 v);

/// The d tuples ([d 1]_q xi, ..., [d d-1]_q xi^{d-1}), xi = exp(2 pi i j / d), j = 0..d-1.
std::vector<std::vector<cplx>> trivial_tuples(int d, std::uint64_t q);

enum class Membership { Inside, Outside, Asymmetric };
std::string to_string(Membership m);

struct MembershipResult {
  Membership status = Membership::Outside;
  std::vector<cplx> roots;  // of sum_k (-1)^k sigma_k z^{d-k}
};

/// Sigma_d test: sigma_k = lambda_k q^{-k(d-k)/2}; inside iff every root of
/// the characteristic polynomial lies on the unit circle within tol. Roots
/// closer than a cluster radius are judged by their centroid so repeated
/// roots are not split by rounding.
MembershipResult sigma_d_membership(const std::vector<cplx>& tuple, int d, std::uint64_t q, double tol = 1e-6);

struct JointSpectrum {
  std::vector<std::vector<cplx>> tuples;  // one per eigenvector, lexicographically sorted
  double max_residual = 0;
  double residual_tol = 0;
  int attempts = 0;
  std::uint64_t seed = 0;
};

/// Simultaneous diagonalization of commuting normal integer matrices with
/// A_k^T = A_{d-k} (both verified exactly). Random symmetric combination,
/// then a Hermitian refinement inside degenerate clusters; up to 5 retries.
JointSpectrum joint_spectrum(const std::vector<SparseMatrix>& ops, std::uint64_t seed = 0, double tol = 1e-8);

enum class TupleClass { Trivial, Inside, Outside, Asymmetric };
std::string to_string(TupleClass c);

struct ComplexVerdict {
  bool ramanujan = false;
  std::vector<TupleClass> classes;
  std::size_t trivial = 0, inside = 0, outside = 0, asymmetric = 0;
};
ComplexVerdict is_ramanujan_complex(const std::vector<std::vector<cplx>>& tuples, int d, std::uint64_t q,
                                    double tol = 1e-6);

struct ExtremalResult {
  double max_ritz = 0, min_ritz = 0;
  double spectral_radius = 0;  // max(|max_ritz|, |min_ritz|)
  double residual = 0;         // worst residual of the two extreme Ritz pairs
  int iterations = 0;
  bool converged = false;
};

/// Lanczos with full reorthogonalization on a symmetric sparse matrix,
/// restricted to the orthogonal complement of `deflate`.
ExtremalResult lanczos_extremal(const SparseMatrix& a, const std::vector<std::vector<double>>& deflate,
                                std::uint64_t seed = 0, int max_iter = 400, double tol = 1e-8);

/// Largest r such that every radius-r ball of the graph is a tree, i.e.
/// floor((girth - 1) / 2); nullopt for forests. For a quotient of a regular
/// tree this is the radius up to which the covering map is injective.
std::optional<int> injectivity_radius(const Graph& g);

}  // namespace rlab
