#pragma once

#include <cstdint>
#include <vector>

#include "rlab/algebra/finite_field.hpp"
#include "rlab/algebra/matrix.hpp"
#include "rlab/algebra/series.hpp"

namespace rlab {

/// w in F_{q^d}[[y]] with constant term 1 and w * phi(w) * ... * phi^{d-1}(w)
/// = 1 + y mod y^M, by lifting one coefficient at a time: each step solves
/// Tr(c) = r with c the least field element of the required trace.
/// `fqd` must be a degree-d extension of F_q (phi is its relative Frobenius).
TruncSeries norm_equation_series(const FieldPtr& fqd, int precision);

/// F_{q^d} (x) F_{q^e} realised as F_{q^e}[x]/(m(x)) where m is the modulus of
/// F_{q^d} over F_q. phi_hat(x) = x^q is F_{q^e}-linear.
class TensorRing {
 public:
  using Element = std::vector<Elem>;

  /// `fqd` and `fqe` must both sit directly over the same F_q (fqe may equal F_q).
  TensorRing(FieldPtr fqd, FieldPtr fqe);

  const FieldPtr& scalars() const { return fqe_; }
  const FieldPtr& split_field() const { return fqd_; }
  int degree() const { return d_; }

  Element zero() const { return Element(d_, 0); }
  Element one() const;
  Element scalar(Elem s) const;
  /// Embed an element of F_{q^d}.
  Element embed(Elem xi) const;
  Element add(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element phi(const Element& a, int times = 1) const;
  /// a * phi(a) * ... * phi^{d-1}(a); lies in F_{q^e}.
  Element norm(const Element& a) const;
  /// Matrix of multiplication by a on the basis 1, x, ..., x^{d-1}.
  FMatrix mult_matrix(const Element& a) const;
  /// Matrix of phi_hat on the same basis (entries in F_q).
  const FMatrix& frobenius_matrix() const { return phi_mat_; }

 private:
  FieldPtr fqd_, fqe_;
  int d_;
  std::vector<Elem> mod_;  // monic modulus of F_{q^d} over F_q, coefficients as F_{q^e} indices
  FMatrix phi_mat_;
};

struct NormSolution {
  TensorRing::Element w;
  std::uint64_t candidates_tried = 0;
  bool exhaustive = false;
};

/// w with phi_hat-norm equal to `target` (a nonzero element of F_{q^e}).
/// Exhaustive in index order when q^{de} <= 2^20, otherwise seeded sampling
/// with a bounded number of draws (RetryExhausted when it runs out).
NormSolution norm_equation_finite(const TensorRing& ring, Elem target, std::uint64_t seed = 0,
                                  std::uint64_t max_samples = 1u << 22);

}  // namespace rlab
