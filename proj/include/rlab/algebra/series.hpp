#pragma once

#include <optional>
#include <vector>

#include "rlab/algebra/finite_field.hpp"

namespace rlab {

/// Element of F[[y]]/(y^M): coefficients c_0..c_{M-1}, all known. Results of
/// binary operations carry the smaller of the two precisions.
class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(FieldPtr field, int precision);
  TruncSeries(FieldPtr field, std::vector<Elem> coeffs, int precision);

  static TruncSeries constant(FieldPtr field, Elem c, int precision);
  /// c * y^k.
  static TruncSeries monomial(FieldPtr field, Elem c, int k, int precision);

  const FieldPtr& field() const { return field_; }
  int precision() const { return static_cast<int>(c_.size()); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(int i) const { return i >= 0 && i < precision() ? c_[i] : 0; }
  void set(int i, Elem v) { c_.at(i) = v; }
  /// Index of the first nonzero coefficient, nullopt when zero to precision.
  std::optional<int> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator-() const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(Elem s) const;
  /// Inverse of a series with nonzero constant term.
  TruncSeries inverse() const;
  /// Divide by y^k where k <= valuation; the result loses k digits of precision.
  TruncSeries divided_by_y(int k) const;
  /// Multiply by y^k (precision unchanged, top coefficients drop off).
  TruncSeries times_y(int k) const;
  TruncSeries truncated(int precision) const;
  /// Apply a field map coefficientwise (e.g. Frobenius).
  template <class Fn>
  TruncSeries map(Fn&& fn) const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = fn(c);
    return r;
  }

  bool operator==(const TruncSeries& o) const { return c_ == o.c_; }

 private:
  FieldPtr field_;
  std::vector<Elem> c_;
};

}  // namespace rlab
