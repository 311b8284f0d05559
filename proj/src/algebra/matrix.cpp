#include "rlab/algebra/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "rlab/errors.hpp"

namespace rlab {

FMatrix::FMatrix(FieldPtr field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

FMatrix::FMatrix(FieldPtr field, int rows, int cols, std::vector<Elem> data)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(data)) {
  if (a_.size() != static_cast<std::size_t>(rows) * cols) throw InvalidInput("matrix data size mismatch");
  for (Elem e : a_)
    if (e >= field_->order()) throw InvalidInput("matrix entry outside the field");
}

FMatrix FMatrix::identity(FieldPtr field, int n) { return scalar(std::move(field), n, 1); }

FMatrix FMatrix::scalar(FieldPtr field, int n, Elem s) {
  FMatrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

FMatrix FMatrix::operator*(const FMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("matrix product shape mismatch");
  FMatrix r(field_, rows_, o.cols_);
  const FiniteField& f = *field_;
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      Elem a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(a, o(k, j)));
    }
  return r;
}

FMatrix FMatrix::operator+(const FMatrix& o) const {
  FMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], o.a_.at(i));
  return r;
}

FMatrix FMatrix::operator-(const FMatrix& o) const {
  FMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(a_[i], o.a_.at(i));
  return r;
}

FMatrix FMatrix::scaled(Elem s) const {
  FMatrix r = *this;
  for (auto& e : r.a_) e = field_->mul(e, s);
  return r;
}

FMatrix FMatrix::transpose() const {
  FMatrix r(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

namespace {

// Row echelon form in place; returns rank and accumulates the determinant
// factor (product of pivots with sign) when square.
int echelon(FMatrix& m, Elem* det_out) {
  const FiniteField& f = *m.field();
  Elem det = 1;
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int piv = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) {
      det = 0;
      continue;
    }
    if (piv != rank) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
      det = f.neg(det);
    }
    const Elem p = m(rank, c);
    det = f.mul(det, p);
    const Elem pinv = f.inv(p);
    for (int r = rank + 1; r < m.rows(); ++r) {
      Elem t = m(r, c);
      if (t == 0) continue;
      t = f.mul(t, pinv);
      for (int j = c; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(t, m(rank, j)));
    }
    ++rank;
  }
  if (rank < m.rows()) det = 0;
  if (det_out) *det_out = det;
  return rank;
}

}  // namespace

Elem FMatrix::det() const {
  if (rows_ != cols_) throw InvalidInput("determinant of a non-square matrix");
  FMatrix t = *this;
  Elem d = 0;
  echelon(t, &d);
  return d;
}

int FMatrix::rank() const {
  FMatrix t = *this;
  return echelon(t, nullptr);
}

FMatrix FMatrix::inverse() const {
  if (rows_ != cols_) throw InvalidInput("inverse of a non-square matrix");
  const int n = rows_;
  const FiniteField& f = *field_;
  FMatrix a = *this, inv = identity(field_, n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (a(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw InvalidInput("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a(piv, j), a(c, j));
      std::swap(inv(piv, j), inv(c, j));
    }
    const Elem pinv = f.inv(a(c, c));
    for (int j = 0; j < n; ++j) {
      a(c, j) = f.mul(a(c, j), pinv);
      inv(c, j) = f.mul(inv(c, j), pinv);
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Elem t = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) = f.sub(a(r, j), f.mul(t, a(c, j)));
        inv(r, j) = f.sub(inv(r, j), f.mul(t, inv(c, j)));
      }
    }
  }
  return inv;
}

FMatrix FMatrix::pow(long long e) const {
  FMatrix base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  FMatrix r = identity(field_, rows_);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool FMatrix::is_scalar() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i != j && (*this)(i, j) != 0) return false;
      if (i == j && (*this)(i, i) != (*this)(0, 0)) return false;
    }
  return true;
}

std::string FMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

ProjMatrix proj_canonical(const FMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("projective matrix must be square");
  if (m.det() == 0) throw InvalidInput("projective class of a singular matrix");
  Elem lead = 0;
  for (Elem e : m.data())
    if (e != 0) {
      lead = e;
      break;
    }
  ProjMatrix p;
  p.m_ = lead == 1 ? m : m.scaled(m.field()->inv(lead));
  return p;
}

ProjMatrix ProjMatrix::operator*(const ProjMatrix& o) const { return proj_canonical(m_ * o.m_); }

ProjMatrix ProjMatrix::inverse() const { return proj_canonical(m_.inverse()); }

bool ProjMatrix::is_identity() const { return m_ == FMatrix::identity(m_.field(), m_.rows()); }

SeriesMatrix::SeriesMatrix(FieldPtr field, int n, int precision)
    : field_(std::move(field)), n_(n), prec_(precision),
      a_(static_cast<std::size_t>(n) * n, TruncSeries(field_, precision)) {}

SeriesMatrix SeriesMatrix::identity(FieldPtr field, int n, int precision) {
  SeriesMatrix m(field, n, precision);
  for (int i = 0; i < n; ++i) m(i, i) = TruncSeries::constant(field, 1, precision);
  return m;
}

SeriesMatrix SeriesMatrix::constant(const FMatrix& c, int precision) {
  return from_coefficients({c}, precision);
}

SeriesMatrix SeriesMatrix::from_coefficients(const std::vector<FMatrix>& terms, int precision) {
  if (terms.empty()) throw InvalidInput("no coefficient matrices");
  const int n = terms[0].rows();
  SeriesMatrix m(terms[0].field(), n, precision);
  for (int k = 0; k < static_cast<int>(terms.size()) && k < precision; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j).set(k, terms[k](i, j));
  return m;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
  const int p = std::min(prec_, o.prec_);
  SeriesMatrix r(field_, n_, p);
  const FiniteField& f = *field_;
  // Accumulate coefficientwise to avoid allocating temporaries per entry.
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      std::vector<Elem> acc(static_cast<std::size_t>(p), 0);
      for (int k = 0; k < n_; ++k) {
        const auto& a = (*this)(i, k).coeffs();
        const auto& b = o(k, j).coeffs();
        for (int s = 0; s < p; ++s) {
          if (a[s] == 0) continue;
          for (int t = 0; s + t < p; ++t)
            if (b[t] != 0) acc[s + t] = f.add(acc[s + t], f.mul(a[s], b[t]));
        }
      }
      r(i, j) = TruncSeries(field_, std::move(acc), p);
    }
  return r;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
  SeriesMatrix r(field_, n_, std::min(prec_, o.prec_));
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
  SeriesMatrix r(field_, n_, std::min(prec_, o.prec_));
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

SeriesMatrix SeriesMatrix::scaled(const TruncSeries& s) const {
  SeriesMatrix r(field_, n_, std::min(prec_, s.precision()));
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

SeriesMatrix SeriesMatrix::truncated(int precision) const {
  SeriesMatrix r(field_, n_, std::min(precision, prec_));
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].truncated(r.prec_);
  return r;
}

FMatrix SeriesMatrix::coefficient(int k) const {
  FMatrix m(field_, n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m(i, j) = (*this)(i, j).coeff(k);
  return m;
}

std::optional<int> SeriesMatrix::min_valuation() const {
  std::optional<int> best;
  for (const auto& e : a_) {
    auto v = e.valuation();
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

bool SeriesMatrix::operator==(const SeriesMatrix& o) const {
  if (n_ != o.n_ || prec_ != o.prec_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!(a_[i] == o.a_[i])) return false;
  return true;
}

std::vector<int> smith_valuations(const SeriesMatrix& input) {
  // Eliminating below a pivot y^v * unit uses (a_rc / y^v) known to M - v
  // times a pivot row whose entries all have valuation >= v, so the remaining
  // block stays exact modulo y^M.
  const int n = input.dim();
  const FiniteField& f = *input.field();
  std::vector<std::vector<TruncSeries>> a(n, std::vector<TruncSeries>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = input(i, j);
  std::vector<int> rows(n), cols(n);
  for (int i = 0; i < n; ++i) rows[i] = cols[i] = i;
  std::vector<int> out;
  for (int step = 0; step < n; ++step) {
    int pr = -1, pc = -1, pv = 0;
    for (int ri = step; ri < n; ++ri)
      for (int ci = step; ci < n; ++ci) {
        auto v = a[rows[ri]][cols[ci]].valuation();
        if (v && (pr < 0 || *v < pv)) {
          pr = ri;
          pc = ci;
          pv = *v;
        }
      }
    if (pr < 0)
      throw InsufficientPrecision("smith reduction: block vanishes to precision " +
                                  std::to_string(input.precision()));
    std::swap(rows[step], rows[pr]);
    std::swap(cols[step], cols[pc]);
    const int R = rows[step], C = cols[step];
    const TruncSeries unit_inv = a[R][C].divided_by_y(pv).inverse();
    for (int ri = step + 1; ri < n; ++ri) {
      const int r = rows[ri];
      if (a[r][C].is_zero()) continue;
      const TruncSeries factor = a[r][C].divided_by_y(pv) * unit_inv;
      for (int ci = step; ci < n; ++ci) {
        const int c = cols[ci];
        // factor has reduced precision; the product with a valuation >= pv
        // entry is exact to the full precision.
        const auto& fc = factor.coeffs();
        const auto& rc = a[R][c].coeffs();
        std::vector<Elem> acc(static_cast<std::size_t>(input.precision()), 0);
        for (int s = 0; s < static_cast<int>(fc.size()); ++s) {
          if (fc[s] == 0) continue;
          for (int t = pv; s + t < input.precision(); ++t)
            if (rc[t] != 0) acc[s + t] = f.add(acc[s + t], f.mul(fc[s], rc[t]));
        }
        a[r][c] = a[r][c] - TruncSeries(input.field(), std::move(acc), input.precision());
      }
    }
    out.push_back(pv);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rlab
