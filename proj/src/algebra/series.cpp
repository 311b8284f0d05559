#include "rlab/algebra/series.hpp"

#include <algorithm>

#include "rlab/errors.hpp"

namespace rlab {

TruncSeries::TruncSeries(FieldPtr field, int precision) : field_(std::move(field)) {
  if (precision < 0) throw InvalidInput("negative series precision");
  c_.assign(static_cast<std::size_t>(precision), 0);
}

TruncSeries::TruncSeries(FieldPtr field, std::vector<Elem> coeffs, int precision) : field_(std::move(field)) {
  if (precision < 0) throw InvalidInput("negative series precision");
  coeffs.resize(static_cast<std::size_t>(precision), 0);
  c_ = std::move(coeffs);
}

TruncSeries TruncSeries::constant(FieldPtr field, Elem c, int precision) {
  return monomial(std::move(field), c, 0, precision);
}

TruncSeries TruncSeries::monomial(FieldPtr field, Elem c, int k, int precision) {
  TruncSeries s(std::move(field), precision);
  if (k >= 0 && k < precision) s.c_[k] = c;
  return s;
}

std::optional<int> TruncSeries::valuation() const {
  for (int i = 0; i < precision(); ++i)
    if (c_[i] != 0) return i;
  return std::nullopt;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(field_, std::min(precision(), o.precision()));
  for (int i = 0; i < r.precision(); ++i) r.c_[i] = field_->add(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  TruncSeries r(field_, std::min(precision(), o.precision()));
  for (int i = 0; i < r.precision(); ++i) r.c_[i] = field_->sub(c_[i], o.c_[i]);
  return r;
}

TruncSeries TruncSeries::operator-() const {
  return map([&](Elem c) { return field_->neg(c); });
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  const int m = std::min(precision(), o.precision());
  TruncSeries r(field_, m);
  for (int i = 0; i < m; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; i + j < m; ++j) r.c_[i + j] = field_->add(r.c_[i + j], field_->mul(c_[i], o.c_[j]));
  }
  return r;
}

TruncSeries TruncSeries::scaled(Elem s) const {
  return map([&](Elem c) { return field_->mul(c, s); });
}

TruncSeries TruncSeries::inverse() const {
  if (precision() == 0) return *this;
  if (c_[0] == 0) throw InvalidInput("series inverse needs a unit constant term");
  const int m = precision();
  TruncSeries r(field_, m);
  const Elem inv0 = field_->inv(c_[0]);
  r.c_[0] = inv0;
  for (int n = 1; n < m; ++n) {
    Elem s = 0;
    for (int k = 1; k <= n; ++k) s = field_->add(s, field_->mul(c_[k], r.c_[n - k]));
    r.c_[n] = field_->neg(field_->mul(s, inv0));
  }
  return r;
}

TruncSeries TruncSeries::divided_by_y(int k) const {
  if (k < 0) throw InvalidInput("negative shift");
  for (int i = 0; i < std::min(k, precision()); ++i)
    if (c_[i] != 0) throw InvalidInput("series not divisible by y^" + std::to_string(k));
  const int m = std::max(0, precision() - k);
  TruncSeries r(field_, m);
  for (int i = 0; i < m; ++i) r.c_[i] = c_[i + k];
  return r;
}

TruncSeries TruncSeries::times_y(int k) const {
  TruncSeries r(field_, precision());
  for (int i = 0; i + k < precision(); ++i) r.c_[i + k] = c_[i];
  return r;
}

TruncSeries TruncSeries::truncated(int precision) const {
  TruncSeries r = *this;
  r.c_.resize(static_cast<std::size_t>(std::min(precision, this->precision())));
  return r;
}

}  // namespace rlab
