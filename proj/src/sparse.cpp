#include "rlab/sparse.hpp"

#include <algorithm>
#include <map>

#include "rlab/errors.hpp"

namespace rlab {

SparseMatrix SparseMatrix::from_triplets(int rows, int cols, std::vector<std::tuple<int, int, std::int64_t>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
  SparseMatrix m(rows, cols);
  std::size_t i = 0;
  while (i < entries.size()) {
    auto [r, c, v] = entries[i];
    if (r < 0 || r >= rows || c < 0 || c >= cols) throw InvalidInput("sparse entry out of range");
    std::size_t j = i + 1;
    while (j < entries.size() && std::get<0>(entries[j]) == r && std::get<1>(entries[j]) == c) v += std::get<2>(entries[j++]);
    if (v != 0) {
      m.col_.push_back(c);
      m.val_.push_back(v);
      ++m.ptr_[static_cast<std::size_t>(r) + 1];
    }
    i = j;
  }
  for (int r = 0; r < rows; ++r) m.ptr_[r + 1] += m.ptr_[r];
  return m;
}

std::int64_t SparseMatrix::at(int r, int c) const {
  auto b = col_.begin() + ptr_[r], e = col_.begin() + ptr_[r + 1];
  auto it = std::lower_bound(b, e, c);
  return (it != e && *it == c) ? val_[static_cast<std::size_t>(it - col_.begin())] : 0;
}

std::int64_t SparseMatrix::row_sum(int r) const {
  std::int64_t s = 0;
  for (auto k = ptr_[r]; k < ptr_[r + 1]; ++k) s += val_[k];
  return s;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::tuple<int, int, std::int64_t>> t;
  t.reserve(nnz());
  for (int r = 0; r < rows_; ++r)
    for (auto k = ptr_[r]; k < ptr_[r + 1]; ++k) t.emplace_back(col_[k], r, val_[k]);
  return from_triplets(cols_, rows_, std::move(t));
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("sparse product shape mismatch");
  SparseMatrix m(rows_, o.cols_);
  std::vector<std::int64_t> acc(static_cast<std::size_t>(o.cols_), 0);
  std::vector<char> mark(static_cast<std::size_t>(o.cols_), 0);
  std::vector<int> touched;
  for (int r = 0; r < rows_; ++r) {
    touched.clear();
    for (auto k = ptr_[r]; k < ptr_[r + 1]; ++k) {
      const int mid = col_[k];
      for (auto l = o.ptr_[mid]; l < o.ptr_[mid + 1]; ++l) {
        const int c = o.col_[l];
        if (!mark[c]) {
          mark[c] = 1;
          touched.push_back(c);
        }
        acc[c] += val_[k] * o.val_[l];
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int c : touched) {
      if (acc[c] != 0) {
        m.col_.push_back(c);
        m.val_.push_back(acc[c]);
      }
      acc[c] = 0;
      mark[c] = 0;
    }
    m.ptr_[r + 1] = static_cast<std::int64_t>(m.col_.size());
  }
  return m;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("sparse sum shape mismatch");
  std::vector<std::tuple<int, int, std::int64_t>> t;
  for (int r = 0; r < rows_; ++r) {
    for (auto k = ptr_[r]; k < ptr_[r + 1]; ++k) t.emplace_back(r, col_[k], val_[k]);
    for (auto k = o.ptr_[r]; k < o.ptr_[r + 1]; ++k) t.emplace_back(r, o.col_[k], o.val_[k]);
  }
  return from_triplets(rows_, cols_, std::move(t));
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  SparseMatrix neg = o;
  for (auto& v : neg.val_) v = -v;
  return *this + neg;
}

void SparseMatrix::apply(const double* x, double* y) const {
  for (int r = 0; r < rows_; ++r) {
    double s = 0;
    for (auto k = ptr_[r]; k < ptr_[r + 1]; ++k) s += static_cast<double>(val_[k]) * x[col_[k]];
    y[r] = s;
  }
}

SparseMatrix SparseMatrix::mod2() const {
  std::vector<std::tuple<int, int, std::int64_t>> t;
  for (int r = 0; r < rows_; ++r)
    for (auto k = ptr_[r]; k < ptr_[r + 1]; ++k)
      if (val_[k] % 2 != 0) t.emplace_back(r, col_[k], 1);
  return from_triplets(rows_, cols_, std::move(t));
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && ptr_ == o.ptr_ && col_ == o.col_ && val_ == o.val_;
}

}  // namespace rlab
