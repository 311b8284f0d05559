#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rlab {

/// Field elements are dense indices into [0, order). For an extension of a
/// base field of order B, the index of c_0 + c_1 x + ... is sum c_i B^i, so a
/// base element keeps its own index inside the extension.
using Elem = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// Finite field F_Q built either as a prime field F_p or as a simple extension
/// base[x]/(f) of another finite field. Multiplication runs through log/exp
/// tables, so every operation is O(1) (addition is O(degree) in odd
/// characteristic extensions).
class FiniteField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 22;

  /// Prime field F_p.
  static FieldPtr prime(std::uint32_t p);

  /// F_{p^m} as an extension of F_p. When `modulus` is absent the
  /// least monic irreducible of degree m is used (coefficient vectors compared
  /// as base-p integers with the x^{m-1} coefficient most significant).
  /// `modulus` is low-to-high and may omit the leading 1 or include it.
  static FieldPtr make(std::uint32_t p, int m,
                       std::optional<std::vector<Elem>> modulus = std::nullopt);

  /// Degree-`degree` extension of `base`, same modulus conventions as make().
  static FieldPtr extend(const FieldPtr& base, int degree,
                         std::optional<std::vector<Elem>> modulus = std::nullopt);

  /// F_q for a prime power q, built over F_p with the default modulus.
  static FieldPtr of_order(std::uint64_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t order() const { return order_; }
  /// Degree over the immediate base (1 for prime fields).
  int degree() const { return degree_; }
  int absolute_degree() const;
  /// Immediate base field, nullptr for a prime field.
  const FieldPtr& base() const { return base_; }
  std::uint32_t base_order() const { return base_ ? base_->order() : p_; }
  /// Monic modulus over the base, low-to-high including the leading 1. Empty
  /// for prime fields.
  const std::vector<Elem>& modulus() const { return modulus_; }
  bool is_prime_field() const { return !base_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The class of x in base[x]/(f) (for prime fields, 1).
  Elem generator() const { return base_ ? base_order() : 1; }
  Elem primitive_element() const { return exp_.empty() ? 1 : exp_[1 % exp_.size()]; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= order_ - 1) s -= order_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;
  /// Discrete log with respect to primitive_element(); requires a != 0.
  std::uint32_t log(Elem a) const;

  /// a -> a^{base_order()} applied `times` times (the relative Frobenius).
  Elem frobenius(Elem a, int times = 1) const;
  /// Relative trace and norm down to the immediate base; the result is a base
  /// element index.
  Elem trace(Elem a) const;
  Elem norm(Elem a) const;

  bool in_base(Elem a) const { return a < base_order(); }
  /// Coefficients over the immediate base, size degree().
  std::vector<Elem> coords(Elem a) const;
  Elem from_coords(std::span<const Elem> c) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;
  bool is_square(Elem a) const;

  /// Structural identity: same order and the same modulus chain.
  bool same_as(const FiniteField& other) const;
  std::string describe() const;

 private:
  FiniteField() = default;
  void build_tables();
  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_ = 0;
  std::uint32_t order_ = 0;
  int degree_ = 1;
  FieldPtr base_;
  std::vector<Elem> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> add_table_;  // only for small odd-characteristic extensions
};

/// Two pointers naming the same field (pointer or structural equality).
bool same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace rlab
