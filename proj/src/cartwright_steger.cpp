#include "rlab/cartwright_steger.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

#include "rlab/errors.hpp"

namespace rlab {

namespace {

Poly one_plus_y(const FieldPtr& f) { return Poly(f, {1, 1}); }

bool all_zero(const std::vector<Poly>& c) {
  return std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.is_zero(); });
}

std::uint64_t checked_pow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) throw CapExceeded("integer power overflows 64 bits");
    r *= b;
  }
  return r;
}

}  // namespace

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  if (y_den != o.y_den || y1_den != o.y1_den || c.size() != o.c.size()) return false;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!(c[i] == o.c[i])) return false;
  return true;
}

CyclicAlgebra::CyclicAlgebra(int d, std::uint64_t q) : d_(d), q_(q) {
  if (d < 2) throw InvalidInput("cyclic algebra needs d >= 2");
  fq_ = FiniteField::of_order(q);
  fqd_ = FiniteField::extend(fq_, d);
  auto power_coords = [&](Elem u) { return fqd_->coords(u); };
  for (Elem u = 1; u < fqd_->order() && xi_.empty(); ++u) {
    FMatrix n(fq_, d, d);
    for (int i = 0; i < d; ++i) {
      auto c = power_coords(fqd_->frobenius(u, i));
      for (int r = 0; r < d; ++r) n(r, i) = c[r];
    }
    if (n.rank() != d) continue;
    for (int i = 0; i < d; ++i) xi_.push_back(fqd_->frobenius(u, i));
    to_normal_ = n.inverse();
  }
  if (xi_.empty()) throw VerificationFailure("no normal basis element found");
  structure_.resize(static_cast<std::size_t>(d) * d * d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k)
        structure_[(static_cast<std::size_t>(j) * d + i) * d + k] =
            normal_coords(fqd_->mul(xi_[i], fqd_->frobenius(xi_[k], j)));
}

std::vector<Elem> CyclicAlgebra::normal_coords(Elem u) const {
  auto c = fqd_->coords(u);
  std::vector<Elem> out(static_cast<std::size_t>(d_), 0);
  for (int r = 0; r < d_; ++r)
    for (int k = 0; k < d_; ++k) out[r] = fq_->add(out[r], fq_->mul(to_normal_(r, k), c[k]));
  return out;
}

AlgebraElement CyclicAlgebra::make(int a, int b, std::vector<Poly> c) const {
  AlgebraElement x;
  if (all_zero(c)) {
    x.c = std::move(c);
    return x;
  }
  while (a > 0 && std::all_of(c.begin(), c.end(), [](const Poly& p) { return p.coeff(0) == 0; })) {
    for (auto& p : c) p = p.shifted(-1);
    --a;
  }
  const Elem minus_one = fq_->neg(1);
  const Poly f = one_plus_y(fq_);
  while (b > 0 && std::all_of(c.begin(), c.end(), [&](const Poly& p) { return p.eval(minus_one) == 0; })) {
    for (auto& p : c) p = p / f;
    --b;
  }
  x.y_den = a;
  x.y1_den = b;
  x.c = std::move(c);
  return x;
}

AlgebraElement CyclicAlgebra::zero() const {
  return make(0, 0, std::vector<Poly>(static_cast<std::size_t>(d_) * d_, Poly(fq_)));
}

AlgebraElement CyclicAlgebra::embed(Elem u) const {
  if (u >= fqd_->order()) throw InvalidInput("element outside F_{q^d}");
  std::vector<Poly> c(static_cast<std::size_t>(d_) * d_, Poly(fq_));
  auto t = normal_coords(u);
  for (int i = 0; i < d_; ++i) c[static_cast<std::size_t>(i) * d_] = Poly::constant(fq_, t[i]);
  return make(0, 0, std::move(c));
}

AlgebraElement CyclicAlgebra::scalar(const Poly& p) const {
  if (!same_field(p.field(), fq_)) throw InvalidInput("scalar polynomial over the wrong field");
  std::vector<Poly> c(static_cast<std::size_t>(d_) * d_, Poly(fq_));
  auto t = normal_coords(1);
  for (int i = 0; i < d_; ++i) c[static_cast<std::size_t>(i) * d_] = p.scaled(t[i]);
  return make(0, 0, std::move(c));
}

AlgebraElement CyclicAlgebra::z() const {
  std::vector<Poly> c(static_cast<std::size_t>(d_) * d_, Poly(fq_));
  auto t = normal_coords(1);
  for (int i = 0; i < d_; ++i) c[static_cast<std::size_t>(i) * d_ + 1] = Poly::constant(fq_, t[i]);
  return make(0, 0, std::move(c));
}

AlgebraElement CyclicAlgebra::z_inverse() const {
  std::vector<Poly> c(static_cast<std::size_t>(d_) * d_, Poly(fq_));
  auto t = normal_coords(1);
  for (int i = 0; i < d_; ++i) c[static_cast<std::size_t>(i) * d_ + d_ - 1] = Poly::constant(fq_, t[i]);
  return make(0, 1, std::move(c));
}

AlgebraElement CyclicAlgebra::b() const { return sub(one(), z_inverse()); }

AlgebraElement CyclicAlgebra::add(const AlgebraElement& x, const AlgebraElement& y) const {
  const int a = std::max(x.y_den, y.y_den), b = std::max(x.y1_den, y.y1_den);
  auto lift = [&](const AlgebraElement& v, std::size_t k) {
    Poly p = v.c[k].shifted(a - v.y_den);
    for (int i = v.y1_den; i < b; ++i) p = p * one_plus_y(fq_);
    return p;
  };
  std::vector<Poly> c(x.c.size(), Poly(fq_));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = lift(x, k) + lift(y, k);
  return make(a, b, std::move(c));
}

AlgebraElement CyclicAlgebra::sub(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement n = y;
  for (auto& p : n.c) p = -p;
  return add(x, n);
}

AlgebraElement CyclicAlgebra::mul(const AlgebraElement& x, const AlgebraElement& y) const {
  const int d = d_;
  std::vector<Poly> c(static_cast<std::size_t>(d) * d, Poly(fq_));
  const Poly f = one_plus_y(fq_);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const Poly& p = x.c[static_cast<std::size_t>(i) * d + j];
      if (p.is_zero()) continue;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const Poly& r = y.c[static_cast<std::size_t>(k) * d + l];
          if (r.is_zero()) continue;
          Poly pr = p * r;
          if (j + l >= d) pr = pr * f;
          const int jl = (j + l) % d;
          const auto& s = structure_[(static_cast<std::size_t>(j) * d + i) * d + k];
          for (int m = 0; m < d; ++m)
            if (s[m] != 0) c[static_cast<std::size_t>(m) * d + jl] += pr.scaled(s[m]);
        }
    }
  return make(x.y_den + y.y_den, x.y1_den + y.y1_den, std::move(c));
}

std::string CyclicAlgebra::to_string(const AlgebraElement& x) const {
  std::string s;
  if (x.y_den || x.y1_den)
    s += "1/(y^" + std::to_string(x.y_den) + " (1+y)^" + std::to_string(x.y1_den) + ") * ";
  s += "[";
  bool first = true;
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) {
      const Poly& p = x.c[static_cast<std::size_t>(i) * d_ + j];
      if (p.is_zero()) continue;
      if (!first) s += " + ";
      first = false;
      s += "(" + p.to_string('y') + ") xi" + std::to_string(i) + " z^" + std::to_string(j);
    }
  return s + (first ? "0]" : "]");
}

std::vector<CsGenerator> cs_generators(const CyclicAlgebra& A) {
  const auto& fqd = A.split_field();
  const std::uint64_t cosets = (fqd->order() - 1) / (A.q() - 1);
  std::vector<char> seen(cosets, 0);
  std::vector<CsGenerator> out;
  const AlgebraElement b = A.b();
  for (Elem u = 1; u < fqd->order(); ++u) {
    const std::uint64_t c = fqd->log(u) % cosets;
    if (seen[c]) continue;
    seen[c] = 1;
    out.push_back({u, A.mul(A.mul(A.embed(u), b), A.embed(fqd->inv(u)))});
  }
  return out;
}

namespace {

FMatrix power_mult_matrix(const FieldPtr& fq, const FieldPtr& fqd, Elem u) {
  const int d = fqd->degree();
  FMatrix m(fq, d, d);
  for (int k = 0; k < d; ++k) {
    auto c = fqd->coords(fqd->mul(u, fqd->pow(fqd->generator(), k)));
    for (int r = 0; r < d; ++r) m(r, k) = c[r];
  }
  return m;
}

FMatrix power_frobenius_matrix(const FieldPtr& fq, const FieldPtr& fqd) {
  const int d = fqd->degree();
  FMatrix m(fq, d, d);
  for (int k = 0; k < d; ++k) {
    auto c = fqd->coords(fqd->frobenius(fqd->pow(fqd->generator(), k), 1));
    for (int r = 0; r < d; ++r) m(r, k) = c[r];
  }
  return m;
}

}  // namespace

LocalSplitting::LocalSplitting(const CyclicAlgebra& A, int precision) : A_(&A), prec_(precision) {
  if (precision < 2) throw InvalidInput("local splitting needs precision >= 2");
  const int d = A.degree();
  const auto& fq = A.base_field();
  const auto& fqd = A.split_field();
  const TruncSeries w = norm_equation_series(fqd, precision);
  std::vector<FMatrix> terms;
  for (int n = 0; n < precision; ++n) terms.push_back(power_mult_matrix(fq, fqd, w.coeff(n)));
  const SeriesMatrix z = SeriesMatrix::from_coefficients(terms, precision) *
                         SeriesMatrix::constant(power_frobenius_matrix(fq, fqd), precision);
  zpow_.push_back(SeriesMatrix::identity(fq, d, precision));
  for (int j = 1; j <= d; ++j) zpow_.push_back(zpow_.back() * z);
  const SeriesMatrix target =
      SeriesMatrix::identity(fq, d, precision).scaled(TruncSeries(fq, {1, 1}, precision));
  if (!(zpow_[d] == target)) throw VerificationFailure("local splitting: Z^d differs from (1+y) I");
  zpow_.pop_back();
  for (Elem xi : A.normal_basis()) {
    auto lhs = z * xi_matrix(xi);
    auto rhs = xi_matrix(fqd->frobenius(xi, 1)) * z;
    if (!(lhs == rhs)) throw VerificationFailure("local splitting: Z R(xi) Z^{-1} differs from R(phi xi)");
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) basis_.push_back(xi_matrix(A.normal_basis()[i]) * zpow_[j]);
}

SeriesMatrix LocalSplitting::xi_matrix(Elem u) const {
  return SeriesMatrix::constant(power_mult_matrix(A_->base_field(), A_->split_field(), u), prec_);
}

LocalImage LocalSplitting::image(const AlgebraElement& x) const {
  const int d = A_->degree();
  const auto& fq = A_->base_field();
  SeriesMatrix m(fq, d, prec_);
  for (std::size_t k = 0; k < x.c.size(); ++k) {
    const Poly& p = x.c[k];
    if (p.is_zero()) continue;
    std::vector<Elem> coeffs(p.coeffs().begin(), p.coeffs().end());
    m = m + basis_[k].scaled(TruncSeries(fq, coeffs, prec_));
  }
  if (x.y1_den > 0) {
    TruncSeries inv = TruncSeries(fq, {1, 1}, prec_).inverse();
    TruncSeries s = TruncSeries::constant(fq, 1, prec_);
    for (int i = 0; i < x.y1_den; ++i) s = s * inv;
    m = m.scaled(s);
  }
  return {m, x.y_den};
}

FiniteSplitting::FiniteSplitting(const CyclicAlgebra& A, const Poly& g, std::uint64_t seed) : A_(&A), g_(g) {
  const auto& fq = A.base_field();
  if (!same_field(g.field(), fq)) throw InvalidInput("ideal generator must be a polynomial over F_q");
  if (g.degree() < 1) throw InvalidInput("ideal generator must have positive degree");
  if (!is_irreducible(g)) throw InvalidInput("ideal generator " + g.to_string('y') + " is not irreducible");
  if (g.eval(0) == 0) throw InvalidInput("ideal (y) is a place in S");
  if (g.eval(fq->neg(1)) == 0) throw InvalidInput("ideal (1+y) is a place in S");
  e_ = g.degree();
  if (e_ == 1) {
    fqe_ = fq;
    beta_ = fq->neg(fq->div(g.coeff(0), g.coeff(1)));
  } else {
    fqe_ = FiniteField::extend(fq, e_, g.coeffs());
    beta_ = fqe_->generator();
  }
  if (reduce(g) != 0) throw VerificationFailure("beta is not a root of the ideal generator");
  TensorRing ring(A.split_field(), fqe_);
  norm_ = norm_equation_finite(ring, fqe_->add(1, beta_), seed);
  z_ = ring.mult_matrix(norm_.w) * ring.frobenius_matrix();
  const int d = A.degree();
  auto rx = [&](Elem u) { return ring.mult_matrix(ring.embed(u)); };
  if (!(z_.pow(d) == FMatrix::scalar(fqe_, d, fqe_->add(1, beta_))))
    throw VerificationFailure("finite splitting: Z^d differs from (1+beta) I");
  for (Elem xi : A.normal_basis())
    if (!(z_ * rx(xi) == rx(A.split_field()->frobenius(xi, 1)) * z_))
      throw VerificationFailure("finite splitting: Z R(xi) Z^{-1} differs from R(phi xi)");
  std::vector<FMatrix> zp = {FMatrix::identity(fqe_, d)};
  for (int j = 1; j < d; ++j) zp.push_back(zp.back() * z_);
  FMatrix span(fqe_, d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      basis_.push_back(rx(A.normal_basis()[i]) * zp[j]);
      const auto& data = basis_.back().data();
      for (int k = 0; k < d * d; ++k) span(i * d + j, k) = data[k];
    }
  if (span.rank() != d * d) throw VerificationFailure("finite splitting image does not span M_d(F_{q^e})");
}

Elem FiniteSplitting::reduce(const Poly& p) const {
  Elem r = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = fqe_->add(fqe_->mul(r, beta_), *it);
  return r;
}

FMatrix FiniteSplitting::raw_image(const AlgebraElement& x) const {
  const int d = A_->degree();
  FMatrix m(fqe_, d, d);
  for (std::size_t k = 0; k < x.c.size(); ++k) {
    const Elem s = reduce(x.c[k]);
    if (s != 0) m = m + basis_[k].scaled(s);
  }
  const Elem den = fqe_->mul(fqe_->pow(beta_, x.y_den), fqe_->pow(fqe_->add(1, beta_), x.y1_den));
  return m.scaled(fqe_->inv(den));
}

ProjMatrix FiniteSplitting::image(const AlgebraElement& x) const { return proj_canonical(raw_image(x)); }

Poly parse_poly(const FieldPtr& fq, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InvalidInput("empty polynomial");
  auto to_elem = [&](const std::string& digits) -> Elem {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw InvalidInput("bad polynomial coefficient '" + digits + "'");
    const unsigned long v = std::stoul(digits);
    if (v >= fq->order()) throw InvalidInput("coefficient " + digits + " outside F_" + std::to_string(fq->order()));
    return static_cast<Elem>(v);
  };
  std::vector<Elem> c;
  if (s.front() == '[') {
    if (s.back() != ']') throw InvalidInput("unterminated coefficient list");
    std::string body = s.substr(1, s.size() - 2);
    std::size_t pos = 0;
    while (pos <= body.size() && !body.empty()) {
      auto comma = body.find(',', pos);
      c.push_back(to_elem(body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return Poly(fq, c);
  }
  Poly out(fq);
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  while (pos < s.size()) {
    std::size_t end = s.find_first_of("+-", pos);
    std::string term = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    auto v = term.find_first_of("xy");
    Elem coef = 1;
    int deg = 0;
    if (v == std::string::npos) {
      coef = to_elem(term);
    } else {
      std::string head = term.substr(0, v);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (!head.empty()) coef = to_elem(head);
      std::string tail = term.substr(v + 1);
      deg = 1;
      if (!tail.empty()) {
        if (tail[0] != '^') throw InvalidInput("bad polynomial term '" + term + "'");
        tail = tail.substr(1);
        if (tail.empty() || !std::all_of(tail.begin(), tail.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw InvalidInput("bad exponent in '" + term + "'");
        deg = std::stoi(tail);
      }
    }
    if (negative) coef = fq->neg(coef);
    out += Poly::monomial(fq, coef, deg);
    if (end == std::string::npos) break;
    negative = s[end] == '-';
    pos = end + 1;
    if (pos >= s.size()) throw InvalidInput("polynomial ends with an operator");
  }
  return out;
}

namespace {

SigmaSets sigma_attempt(const CyclicAlgebra& A, const std::vector<CsGenerator>& gens, int precision) {
  const int d = A.degree();
  const auto& fq = A.base_field();
  LocalSplitting L(A, precision);
  std::vector<LocalImage> img;
  for (const auto& g : gens) img.push_back(L.image(g.b));
  const int n = static_cast<int>(gens.size());
  SigmaSets out;
  out.d = d;
  out.q = A.q();
  out.precision = precision;
  std::vector<std::vector<LocalImage>> images(static_cast<std::size_t>(d - 1));
  out.words.resize(d - 1);
  out.targets.resize(d - 1);
  for (int i = 1; i < d; ++i) {
    const auto want = static_cast<std::size_t>(gaussian_binomial(d, i, A.q()));
    bool done = false;
    std::size_t examined = 0;
    for (int len : {i, i + d}) {
      if (std::pow(static_cast<double>(n), len) > 2e7) throw CapExceeded("Sigma_i word search too large");
      std::vector<std::vector<int>> words;
      std::vector<LatticeClass> targets;
      std::vector<LocalImage> ims;
      std::set<std::vector<std::uint32_t>> seen;
      std::vector<int> word;
      std::vector<LocalImage> prefix = {LocalImage{SeriesMatrix::identity(fq, d, precision), 0}};
      // Depth-first over words in lexicographic order, reusing prefix products.
      auto visit = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == len) {
          ++examined;
          const LocalImage& m = prefix.back();
          auto a = adjacency_type(m.m);
          if (a.kind != AdjacencyKind::Adjacent || a.color != i) return;
          auto cls = lattice_class(m.m);
          if (!seen.insert(cls.key()).second) return;
          words.push_back(word);
          targets.push_back(std::move(cls));
          ims.push_back(m);
          return;
        }
        for (int s = 0; s < n; ++s) {
          word.push_back(s);
          prefix.push_back(prefix.back() * img[s]);
          self(self);
          prefix.pop_back();
          word.pop_back();
        }
      };
      visit(visit);
      out.word_length.resize(d - 1);
      out.word_length[i - 1] = len;
      if (words.size() == want) {
        out.words[i - 1] = std::move(words);
        out.targets[i - 1] = std::move(targets);
        images[i - 1] = std::move(ims);
        done = true;
        break;
      }
    }
    out.candidates.push_back(examined);
    if (!done)
      throw VerificationFailure("Sigma_" + std::to_string(i) + " count differs from [" + std::to_string(d) + " " +
                                std::to_string(i) + "]_q after escalation");
  }
  // gamma in Sigma_i and delta in Sigma_{d-i} are inverse iff gamma delta fixes x0.
  const auto origin = lattice_class(SeriesMatrix::identity(fq, d, precision)).key();
  out.inverse.resize(d - 1);
  for (int i = 1; i < d; ++i) {
    const auto& mine = images[i - 1];
    const auto& other = images[d - i - 1];
    for (std::size_t s = 0; s < mine.size(); ++s) {
      int found = -1;
      for (std::size_t t = 0; t < other.size(); ++t)
        if (lattice_class((mine[s] * other[t]).m).key() == origin) {
          if (found >= 0) throw VerificationFailure("Sigma element with two inverses");
          found = static_cast<int>(t);
        }
      if (found < 0) throw VerificationFailure("Sigma_{d-i} is not Sigma_i inverted");
      out.inverse[i - 1].push_back(found);
    }
  }
  return out;
}

}  // namespace

SigmaSets sigma_sets(const CyclicAlgebra& A, const std::vector<CsGenerator>& gens, int precision) {
  if (precision <= 0) precision = 4 * A.degree();
  try {
    return sigma_attempt(A, gens, precision);
  } catch (const InsufficientPrecision&) {
    return sigma_attempt(A, gens, 2 * precision);
  }
}

CsComplex cs_complex(int d, std::uint64_t q, const Poly& g, int max_dim, std::size_t cap, std::uint64_t seed) {
  CyclicAlgebra A(d, q);
  auto gens = cs_generators(A);
  FiniteSplitting F(A, g, seed);
  CsComplex cx;
  cx.d = d;
  cx.q = q;
  cx.ideal = g;
  cx.e = F.residue_degree();
  cx.sigma = sigma_sets(A, gens, 0);
  std::vector<ProjMatrix> gen_img;
  for (const auto& gen : gens) gen_img.push_back(F.image(gen.b));
  std::set<ProjMatrix> all;
  for (int i = 1; i < d; ++i) {
    std::vector<ProjMatrix> col;
    for (const auto& word : cx.sigma.words[i - 1]) {
      ProjMatrix m = gen_img[word[0]];
      for (std::size_t k = 1; k < word.size(); ++k) m = m * gen_img[word[k]];
      if (m.is_identity()) throw VerificationFailure("a generator maps to the identity mod the ideal");
      if (!all.insert(m).second) throw VerificationFailure("two generators coincide mod the ideal");
      col.push_back(m);
    }
    cx.sigma_hat.push_back(std::move(col));
  }
  for (int i = 1; i < d; ++i)
    for (std::size_t s = 0; s < cx.sigma_hat[i - 1].size(); ++s)
      if (!(cx.sigma_hat[d - i - 1][cx.sigma.inverse[i - 1][s]] == cx.sigma_hat[i - 1][s].inverse()))
        throw VerificationFailure("image of Sigma_{d-i} is not the inverse of Sigma_i");
  cx.group = std::make_shared<const MatrixGroup>(group_closure(cx.sigma_hat[0], cap));
  const int n = static_cast<int>(cx.group->size());
  std::vector<std::vector<std::vector<int>>> tables;
  for (const auto& col : cx.sigma_hat) tables.push_back(right_multiplication_table(*cx.group, col));
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  for (const auto& t : tables)
    for (int x = 0; x < n; ++x) nbrs[x].insert(nbrs[x].end(), t[x].begin(), t[x].end());
  cx.skeleton = Graph::from_neighbor_table(nbrs);
  cx.hecke = hecke_from_tables(n, tables);
  cx.complex = clique_complex(cx.skeleton, max_dim < 0 ? d - 1 : max_dim);

  // Colors: BFS labels, then the largest t | d for which every edge respects them mod t.
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  label[0] = 0;
  std::deque<int> queue = {0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int i = 1; i < d; ++i)
      for (int y : tables[i - 1][x])
        if (label[y] < 0) {
          label[y] = (label[x] + i) % d;
          queue.push_back(y);
        }
  }
  int t = d;
  for (int i = 1; i < d; ++i)
    for (int x = 0; x < n; ++x)
      for (int y : tables[i - 1][x]) t = std::gcd(t, ((label[x] + i - label[y]) % d + d) % d);
  cx.t = t;
  for (int x = 0; x < n; ++x) cx.vertex_color.push_back(label[x] % t);

  std::uint64_t Q = 0;
  try {
    Q = checked_pow(q, cx.e);
    cx.theorem_guaranteed = Q >= static_cast<std::uint64_t>(4) * d * d;
  } catch (const CapExceeded&) {
    cx.theorem_guaranteed = true;
  }
  try {
    cx.pgl_order = pgl_order(d, Q);
    cx.psl_order = psl_order(d, Q);
  } catch (const CapExceeded&) {
    cx.pgl_order = cx.psl_order = 0;
  }
  const std::uint64_t h = cx.group->size();
  if (cx.psl_order && h == cx.psl_order && h == cx.pgl_order) cx.group_name = "PSL=PGL";
  else if (cx.psl_order && h == cx.psl_order) cx.group_name = "PSL";
  else if (cx.pgl_order && h == cx.pgl_order) cx.group_name = "PGL";
  else if (cx.psl_order && h % cx.psl_order == 0) cx.group_name = "index " + std::to_string(h / cx.psl_order) + " over PSL";
  else cx.group_name = "order " + std::to_string(h);
  return cx;
}

TrivialCheck trivial_eigenfunction_check(const CsComplex& cx) {
  const int d = cx.d, t = cx.t;
  const int n = static_cast<int>(cx.vertex_color.size());
  const auto expected_all = trivial_tuples(d, cx.q);
  TrivialCheck out;
  std::vector<double> re(n), im(n), are(n), aim(n);
  for (int j = 0; j < t; ++j) {
    const double ang = 2 * M_PI * j / t;
    for (int x = 0; x < n; ++x) {
      re[x] = std::cos(ang * cx.vertex_color[x]);
      im[x] = std::sin(ang * cx.vertex_color[x]);
    }
    std::vector<cplx> tuple;
    const auto& expected = expected_all[static_cast<std::size_t>(j) * (d / t)];
    for (int k = 1; k < d; ++k) {
      cx.hecke[k - 1].apply(re.data(), are.data());
      cx.hecke[k - 1].apply(im.data(), aim.data());
      const cplx lambda(are[0], aim[0]);  // f(0) = 1
      for (int x = 0; x < n; ++x) {
        const cplx diff = cplx(are[x], aim[x]) - lambda * cplx(re[x], im[x]);
        out.max_error = std::max(out.max_error, std::abs(diff));
      }
      out.max_error = std::max(out.max_error, std::abs(lambda - expected[k - 1]));
      tuple.push_back(lambda);
    }
    out.tuples.push_back(tuple);
    out.expected.push_back(expected);
  }
  return out;
}

CsVerdict cs_ramanujan_verdict(const CsComplex& cx, VerdictMode mode, double tol, std::uint64_t seed) {
  CsVerdict v;
  v.mode = mode;
  v.tol = tol;
  v.theorem_guaranteed = cx.theorem_guaranteed;
  v.trivial = trivial_eigenfunction_check(cx);
  const bool trivial_ok = v.trivial.max_error <= 1e-9;
  const int n = static_cast<int>(cx.vertex_color.size());
  if (mode == VerdictMode::Full) {
    if (n > 5000) throw InvalidInput("full Hecke spectrum is limited to 5000 vertices; use extremal mode");
    v.spectrum = joint_spectrum(cx.hecke, seed);
    v.verdict = is_ramanujan_complex(v.spectrum->tuples, cx.d, cx.q, tol);
    for (std::size_t i = 0; i < v.spectrum->tuples.size(); ++i)
      if (v.verdict->classes[i] != TupleClass::Trivial)
        v.max_nontrivial_abs = std::max(v.max_nontrivial_abs, std::abs(v.spectrum->tuples[i][0]));
    v.pass = v.verdict->ramanujan && trivial_ok;
    return v;
  }
  for (int k = 1; k < cx.d; ++k) {
    double binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (cx.d - i) / (i + 1);
    v.bound += binom * std::pow(static_cast<double>(cx.q), k * (cx.d - k) / 2.0);
  }
  SparseMatrix delta = cx.hecke[0];
  for (std::size_t k = 1; k < cx.hecke.size(); ++k) delta = delta + cx.hecke[k];
  std::vector<std::vector<double>> deflate(static_cast<std::size_t>(cx.t), std::vector<double>(n, 0.0));
  std::vector<double> sizes(static_cast<std::size_t>(cx.t), 0.0);
  for (int x = 0; x < n; ++x) sizes[cx.vertex_color[x]] += 1;
  for (int x = 0; x < n; ++x) deflate[cx.vertex_color[x]][x] = 1.0 / std::sqrt(sizes[cx.vertex_color[x]]);
  v.extremal = lanczos_extremal(delta, deflate, seed);
  v.pass = trivial_ok && v.extremal->converged && v.extremal->spectral_radius <= v.bound * (1 + tol);
  return v;
}

}  // namespace rlab
