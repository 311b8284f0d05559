#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rlab/algebra/finite_field.hpp"
#include "rlab/algebra/series.hpp"

namespace rlab {

/// Dense matrix over a finite field, row-major.
class FMatrix {
 public:
  FMatrix() = default;
  FMatrix(FieldPtr field, int rows, int cols);
  FMatrix(FieldPtr field, int rows, int cols, std::vector<Elem> data);
  static FMatrix identity(FieldPtr field, int n);
  static FMatrix scalar(FieldPtr field, int n, Elem s);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Elem& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const std::vector<Elem>& data() const { return a_; }

  FMatrix operator*(const FMatrix& o) const;
  FMatrix operator+(const FMatrix& o) const;
  FMatrix operator-(const FMatrix& o) const;
  FMatrix scaled(Elem s) const;
  FMatrix transpose() const;
  Elem det() const;
  int rank() const;
  /// Throws InvalidInput when singular.
  FMatrix inverse() const;
  FMatrix pow(long long e) const;
  bool is_scalar() const;

  bool operator==(const FMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  std::string to_string() const;

 private:
  FieldPtr field_;
  int rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

/// Invertible square matrix scaled so its first nonzero entry (row-major) is
/// 1; equal projective classes have equal representatives.
class ProjMatrix {
 public:
  ProjMatrix() = default;
  const FMatrix& matrix() const { return m_; }
  const FieldPtr& field() const { return m_.field(); }
  int dim() const { return m_.rows(); }
  ProjMatrix operator*(const ProjMatrix& o) const;
  ProjMatrix inverse() const;
  bool is_identity() const;
  bool operator==(const ProjMatrix& o) const { return m_ == o.m_; }
  bool operator<(const ProjMatrix& o) const { return m_.data() < o.m_.data(); }

 private:
  friend ProjMatrix proj_canonical(const FMatrix& m);
  FMatrix m_;
};

/// Canonical projective representative. Throws InvalidInput on singular or
/// non-square input.
ProjMatrix proj_canonical(const FMatrix& m);

/// Square matrix over F[[y]]/(y^M).
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(FieldPtr field, int n, int precision);
  static SeriesMatrix identity(FieldPtr field, int n, int precision);
  /// Constant lift of a matrix over the same field.
  static SeriesMatrix constant(const FMatrix& m, int precision);
  /// sum_k y^k * terms[k].
  static SeriesMatrix from_coefficients(const std::vector<FMatrix>& terms, int precision);

  const FieldPtr& field() const { return field_; }
  int dim() const { return n_; }
  int precision() const { return prec_; }
  const TruncSeries& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  TruncSeries& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  SeriesMatrix operator*(const SeriesMatrix& o) const;
  SeriesMatrix operator+(const SeriesMatrix& o) const;
  SeriesMatrix operator-(const SeriesMatrix& o) const;
  SeriesMatrix scaled(const TruncSeries& s) const;
  SeriesMatrix truncated(int precision) const;
  /// Coefficient matrix of y^k.
  FMatrix coefficient(int k) const;
  /// Minimum valuation over all entries; nullopt if the matrix is zero to precision.
  std::optional<int> min_valuation() const;
  bool operator==(const SeriesMatrix& o) const;

 private:
  FieldPtr field_;
  int n_ = 0;
  int prec_ = 0;
  std::vector<TruncSeries> a_;
};

/// y-adic valuations of the elementary divisors, ascending. Pivots are
/// minimum-valuation entries with ties broken row-major. Throws
/// InsufficientPrecision when a remaining block vanishes to the available
/// precision.
std::vector<int> smith_valuations(const SeriesMatrix& m);

}  // namespace rlab
