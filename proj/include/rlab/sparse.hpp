#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

namespace rlab {

/// Square or rectangular integer matrix in CSR form with sorted column indices
/// and no stored zeros. Equality is exact.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), ptr_(static_cast<std::size_t>(rows) + 1, 0) {}
  /// Duplicate (row, col) entries are summed.
  static SparseMatrix from_triplets(int rows, int cols, std::vector<std::tuple<int, int, std::int64_t>> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t nnz() const { return col_.size(); }
  const std::vector<std::int64_t>& row_ptr() const { return ptr_; }
  const std::vector<int>& col_index() const { return col_; }
  const std::vector<std::int64_t>& values() const { return val_; }
  std::int64_t at(int r, int c) const;
  std::int64_t row_sum(int r) const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix operator-(const SparseMatrix& o) const;
  /// y = M x.
  void apply(const double* x, double* y) const;
  /// Entries reduced mod 2 (zeros dropped).
  SparseMatrix mod2() const;
  bool is_zero() const { return col_.empty(); }
  bool operator==(const SparseMatrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> ptr_;
  std::vector<int> col_;
  std::vector<std::int64_t> val_;
};

}  // namespace rlab
