#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rlab/algebra/finite_field.hpp"

namespace rlab {

/// Univariate polynomial over a finite field, coefficients low-to-high with no
/// zero leading coefficient (the zero polynomial has an empty list).
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly constant(FieldPtr field, Elem c);
  static Poly monomial(FieldPtr field, Elem c, int degree);
  static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Elem leading() const { return c_.empty() ? 0 : c_.back(); }
  /// Index of the lowest nonzero coefficient (-1 for zero).
  int valuation() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(Elem s) const;
  /// Multiply by x^k (k >= 0) or drop the lowest -k coefficients (k < 0).
  Poly shifted(int k) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Euclidean division: *this = q * b + r with deg r < deg b.
  std::pair<Poly, Poly> divmod(const Poly& b) const;
  Poly operator/(const Poly& b) const { return divmod(b).first; }
  Poly operator%(const Poly& b) const { return divmod(b).second; }

  Poly monic() const;
  Elem eval(Elem at) const;
  Poly derivative() const;
  Poly map(const FieldPtr& target, auto&& fn) const {
    std::vector<Elem> out;
    out.reserve(c_.size());
    for (Elem e : c_) out.push_back(fn(e));
    return Poly(target, std::move(out));
  }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  void check_same(const Poly& o) const;

  FieldPtr field_;
  std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);
/// base^e mod m.
Poly powmod(Poly base, std::uint64_t e, const Poly& m);
/// Rabin irreducibility test over the coefficient field.
bool is_irreducible(const Poly& f);

}  // namespace rlab
