#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rlab/algebra/group.hpp"
#include "rlab/algebra/norm_equation.hpp"
#include "rlab/algebra/poly.hpp"
#include "rlab/building.hpp"
#include "rlab/complex.hpp"
#include "rlab/spectra.hpp"

namespace rlab {

/// P / (y^a (1+y)^b) with P = sum P_ij(y) xi_i z^j, P_ij in F_q[y]. Kept
/// reduced (no common factor y or 1+y left in every P_ij), so == is equality
/// in the algebra.
struct AlgebraElement {
  int y_den = 0, y1_den = 0;
  std::vector<Poly> c;  // c[i * d + j] multiplies xi_i z^j
  bool operator==(const AlgebraElement& o) const;
};

/// The cyclic algebra over F_q(y) with basis xi_i z^j, z xi = phi(xi) z and
/// z^d = 1 + y. xi_i = phi^i(xi_0) is a normal basis of F_{q^d}/F_q, xi_0
/// the least field element generating one.
class CyclicAlgebra {
 public:
  CyclicAlgebra(int d, std::uint64_t q);

  int degree() const { return d_; }
  std::uint64_t q() const { return q_; }
  const FieldPtr& base_field() const { return fq_; }
  const FieldPtr& split_field() const { return fqd_; }
  const std::vector<Elem>& normal_basis() const { return xi_; }
  /// Coordinates of u in the normal basis.
  std::vector<Elem> normal_coords(Elem u) const;

  AlgebraElement zero() const;
  AlgebraElement one() const { return embed(1); }
  AlgebraElement embed(Elem u) const;
  /// Central element p(y).
  AlgebraElement scalar(const Poly& p) const;
  AlgebraElement z() const;
  AlgebraElement z_inverse() const;
  /// 1 - z^{-1}.
  AlgebraElement b() const;

  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) const;
  std::string to_string(const AlgebraElement& x) const;

 private:
  AlgebraElement make(int a, int b, std::vector<Poly> c) const;

  int d_;
  std::uint64_t q_;
  FieldPtr fq_, fqd_;
  std::vector<Elem> xi_;
  FMatrix to_normal_;                       // power coordinates -> normal coordinates
  std::vector<std::vector<Elem>> structure_;  // [(j*d + i)*d + k] -> coords of xi_i phi^j(xi_k)
};

struct CsGenerator {
  Elem u = 0;  // least representative of its coset in F_{q^d}^x / F_q^x
  AlgebraElement b;
};

/// b_u = u b u^{-1}, one per coset, ascending in u.
std::vector<CsGenerator> cs_generators(const CyclicAlgebra& A);

/// Image y^{-y_shift} * m of an algebra element in M_d(F_q((y))).
struct LocalImage {
  SeriesMatrix m;
  int y_shift = 0;
  LocalImage operator*(const LocalImage& o) const { return {m * o.m, y_shift + o.y_shift}; }
};

/// xi -> R(xi) (multiplication on the power basis of F_{q^d}), z -> R(w) Phi
/// with w from the series norm equation. Both defining relations are checked
/// to the working precision on construction.
class LocalSplitting {
 public:
  LocalSplitting(const CyclicAlgebra& A, int precision);
  int precision() const { return prec_; }
  const SeriesMatrix& z_matrix() const { return zpow_[1]; }
  SeriesMatrix xi_matrix(Elem u) const;
  LocalImage image(const AlgebraElement& x) const;

 private:
  const CyclicAlgebra* A_;
  int prec_;
  std::vector<SeriesMatrix> zpow_;  // Z^0..Z^{d-1}
  std::vector<SeriesMatrix> basis_;  // R(xi_i) Z^j at i*d + j
};

/// Reduction mod an irreducible g coprime to y(1+y): the residue field
/// F_{q^e} = F_q[y]/(g), xi -> R(xi), z -> R(w) Phi with norm(w) = 1 + beta
/// in F_{q^d} (x) F_{q^e}. Relations and full rank d^2 of the image are
/// verified on construction.
class FiniteSplitting {
 public:
  FiniteSplitting(const CyclicAlgebra& A, const Poly& g, std::uint64_t seed = 0);
  const FieldPtr& residue_field() const { return fqe_; }
  int residue_degree() const { return e_; }
  Elem beta() const { return beta_; }
  const Poly& ideal() const { return g_; }
  const FMatrix& z_matrix() const { return z_; }
  const NormSolution& norm_solution() const { return norm_; }
  Elem reduce(const Poly& p) const;
  FMatrix raw_image(const AlgebraElement& x) const;
  /// InvalidInput when the image is singular.
  ProjMatrix image(const AlgebraElement& x) const;

 private:
  const CyclicAlgebra* A_;
  Poly g_;
  int e_;
  FieldPtr fqe_;
  Elem beta_ = 0;
  FMatrix z_;
  NormSolution norm_;
  std::vector<FMatrix> basis_;  // R(xi_i) Z^j
};

/// Parses "y^4+y+1"-style text or a little-endian coefficient list
/// "[1,1,0,0,1]" into a polynomial over F_q.
Poly parse_poly(const FieldPtr& fq, const std::string& text);

/// Sigma_i as words in the generators (indices into cs_generators order).
struct SigmaSets {
  int d = 0;
  std::uint64_t q = 0;
  int precision = 0;
  std::vector<std::vector<std::vector<int>>> words;  // [i-1][s]
  std::vector<std::vector<LatticeClass>> targets;    // gamma x0, same layout
  std::vector<int> word_length;                      // i, or i + d after escalation
  std::vector<std::size_t> candidates;               // words examined per color
  std::vector<std::vector<int>> inverse;             // inverse[i-1][s] = index in color d-i
};

/// Words of length i in Sigma_1 taking x0 to a color-i neighbor, deduplicated
/// by the neighbor reached. The count must be [d i]_q; otherwise the search is
/// repeated once with words of length i + d. Sigma_{d-i} = Sigma_i^{-1} is
/// checked through the building action. precision 0 means 4d; one doubling on
/// InsufficientPrecision.
SigmaSets sigma_sets(const CyclicAlgebra& A, const std::vector<CsGenerator>& gens, int precision = 0);

struct CsComplex {
  int d = 0;
  std::uint64_t q = 0;
  Poly ideal;
  int e = 0;
  std::shared_ptr<const MatrixGroup> group;
  std::vector<std::vector<ProjMatrix>> sigma_hat;  // by color
  SigmaSets sigma;
  Graph skeleton;
  SimplicialComplex complex;
  std::vector<SparseMatrix> hecke;  // A_1..A_{d-1}
  std::vector<int> vertex_color;    // mod t
  int t = 1;                        // number of color classes in the quotient
  bool theorem_guaranteed = false;  // q^e >= 4 d^2
  std::uint64_t pgl_order = 0, psl_order = 0;  // 0 when too large to represent
  std::string group_name;                      // "PSL", "PGL", "PSL=PGL" or "index k over PSL"
};

/// Cayley clique complex of H = <images of Sigma_1> in PGL_d(F_{q^e}) with
/// respect to the images of Sigma. max_dim < 0 means d - 1.
CsComplex cs_complex(int d, std::uint64_t q, const Poly& g, int max_dim = -1, std::size_t cap = 1'000'000,
                     std::uint64_t seed = 0);

/// A_k applied to f_xi(x) = xi^{color(x)} for the t-th roots of unity xi.
struct TrivialCheck {
  std::vector<std::vector<cplx>> tuples;    // measured eigenvalue tuples
  std::vector<std::vector<cplx>> expected;  // matching entries of trivial_tuples
  double max_error = 0;
};
TrivialCheck trivial_eigenfunction_check(const CsComplex& cx);

enum class VerdictMode { Full, Extremal };

struct CsVerdict {
  VerdictMode mode = VerdictMode::Full;
  bool pass = false;
  bool theorem_guaranteed = false;
  double tol = 0;
  TrivialCheck trivial;
  // Full mode.
  std::optional<JointSpectrum> spectrum;
  std::optional<ComplexVerdict> verdict;
  double max_nontrivial_abs = 0;  // largest |lambda_1| among nontrivial tuples
  // Extremal mode.
  double bound = 0;  // sum_k C(d,k) q^{k(d-k)/2}
  std::optional<ExtremalResult> extremal;
};

/// Full: joint spectrum of the Hecke family (at most 5000 vertices) judged
/// tuple by tuple. Extremal: spectral radius of sum_k A_k off the trivial
/// eigenfunctions against the bound, a necessary condition only.
CsVerdict cs_ramanujan_verdict(const CsComplex& cx, VerdictMode mode, double tol = 1e-6, std::uint64_t seed = 0);

}  // namespace rlab
