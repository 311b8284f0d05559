#include "rlab/algebra/norm_equation.hpp"

#include <random>

#include "rlab/errors.hpp"

namespace rlab {

TruncSeries norm_equation_series(const FieldPtr& fqd, int precision) {
  if (precision < 1) throw InvalidInput("norm equation precision must be >= 1");
  if (fqd->is_prime_field()) throw InvalidInput("norm equation needs a proper extension");
  const FiniteField& f = *fqd;
  const int d = f.degree();
  const Elem q = f.base_order();
  // Least element of each trace value.
  std::vector<Elem> by_trace(q, 0);
  std::vector<bool> seen(q, false);
  for (Elem c = 0; c < f.order(); ++c) {
    Elem t = f.trace(c);
    if (!seen[t]) {
      seen[t] = true;
      by_trace[t] = c;
    }
  }
  auto norm = [&](const TruncSeries& w) {
    TruncSeries n = w;
    for (int i = 1; i < d; ++i) n = n * w.map([&](Elem c) { return f.frobenius(c, i); });
    return n;
  };
  TruncSeries w = TruncSeries::constant(fqd, 1, precision);
  for (int n = 1; n < precision; ++n) {
    const TruncSeries nw = norm(w);
    const Elem want = n == 1 ? 1 : 0;
    const Elem r = f.sub(want, nw.coeff(n));
    if (!f.in_base(r)) throw VerificationFailure("norm of a phi-stable series left the base field");
    w.set(n, by_trace[r]);
  }
  TruncSeries check = norm(w);
  TruncSeries target = TruncSeries::constant(fqd, 1, precision);
  if (precision > 1) target.set(1, 1);
  if (!(check == target)) throw VerificationFailure("norm equation lift failed verification");
  return w;
}

TensorRing::TensorRing(FieldPtr fqd, FieldPtr fqe) : fqd_(std::move(fqd)), fqe_(std::move(fqe)) {
  if (fqd_->is_prime_field()) throw InvalidInput("tensor ring needs a proper extension F_{q^d}");
  const FieldPtr& fq = fqd_->base();
  const bool e_is_base = same_field(fqe_, fq);
  if (!e_is_base && !(fqe_->base() && same_field(fqe_->base(), fq)))
    throw InvalidInput("F_{q^d} and F_{q^e} must share the base field");
  d_ = fqd_->degree();
  mod_ = fqd_->modulus();
  phi_mat_ = FMatrix(fqe_, d_, d_);
  for (int j = 0; j < d_; ++j) {
    Elem img = fqd_->frobenius(fqd_->pow(fqd_->generator(), j), 1);
    auto c = fqd_->coords(img);
    for (int i = 0; i < d_; ++i) phi_mat_(i, j) = c[i];
  }
}

TensorRing::Element TensorRing::one() const { return scalar(1); }

TensorRing::Element TensorRing::scalar(Elem s) const {
  Element e(d_, 0);
  e[0] = s;
  return e;
}

TensorRing::Element TensorRing::embed(Elem xi) const {
  auto c = fqd_->coords(xi);
  return Element(c.begin(), c.end());
}

TensorRing::Element TensorRing::add(const Element& a, const Element& b) const {
  Element r(d_);
  for (int i = 0; i < d_; ++i) r[i] = fqe_->add(a[i], b[i]);
  return r;
}

TensorRing::Element TensorRing::mul(const Element& a, const Element& b) const {
  const FiniteField& f = *fqe_;
  std::vector<Elem> prod(2 * d_ - 1, 0);
  for (int i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < d_; ++j) prod[i + j] = f.add(prod[i + j], f.mul(a[i], b[j]));
  }
  for (int k = 2 * d_ - 2; k >= d_; --k) {
    const Elem c = prod[k];
    if (c == 0) continue;
    for (int i = 0; i < d_; ++i) prod[k - d_ + i] = f.sub(prod[k - d_ + i], f.mul(c, mod_[i]));
  }
  prod.resize(d_);
  return prod;
}

TensorRing::Element TensorRing::phi(const Element& a, int times) const {
  Element r = a;
  times %= d_;
  if (times < 0) times += d_;
  for (int t = 0; t < times; ++t) {
    Element next(d_, 0);
    for (int j = 0; j < d_; ++j) {
      if (r[j] == 0) continue;
      for (int i = 0; i < d_; ++i) next[i] = fqe_->add(next[i], fqe_->mul(phi_mat_(i, j), r[j]));
    }
    r = std::move(next);
  }
  return r;
}

TensorRing::Element TensorRing::norm(const Element& a) const {
  Element r = a;
  Element cur = a;
  for (int i = 1; i < d_; ++i) {
    cur = phi(cur);
    r = mul(r, cur);
  }
  return r;
}

FMatrix TensorRing::mult_matrix(const Element& a) const {
  FMatrix m(fqe_, d_, d_);
  Element basis(d_, 0);
  for (int j = 0; j < d_; ++j) {
    std::fill(basis.begin(), basis.end(), 0);
    basis[j] = 1;
    Element col = mul(a, basis);
    for (int i = 0; i < d_; ++i) m(i, j) = col[i];
  }
  return m;
}

NormSolution norm_equation_finite(const TensorRing& ring, Elem target, std::uint64_t seed,
                                  std::uint64_t max_samples) {
  const FiniteField& e = *ring.scalars();
  if (target == 0 || target >= e.order()) throw InvalidInput("norm target must be a nonzero scalar");
  const int d = ring.degree();
  const TensorRing::Element want = ring.scalar(target);
  const std::uint64_t Q = e.order();
  long double total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<long double>(Q);
  NormSolution sol;
  TensorRing::Element w(d, 0);
  if (total <= static_cast<long double>(1u << 20)) {
    sol.exhaustive = true;
    const auto count = static_cast<std::uint64_t>(total);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t t = idx;
      for (int i = 0; i < d; ++i) {
        w[i] = static_cast<Elem>(t % Q);
        t /= Q;
      }
      ++sol.candidates_tried;
      if (ring.norm(w) == want) {
        sol.w = w;
        return sol;
      }
    }
    throw VerificationFailure("norm equation has no solution in the tensor ring");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, Q - 1);
  for (std::uint64_t s = 0; s < max_samples; ++s) {
    for (int i = 0; i < d; ++i) w[i] = static_cast<Elem>(pick(rng));
    ++sol.candidates_tried;
    if (ring.norm(w) == want) {
      sol.w = w;
      return sol;
    }
  }
  throw RetryExhausted("norm equation sampling exhausted " + std::to_string(max_samples) + " draws");
}

}  // namespace rlab
