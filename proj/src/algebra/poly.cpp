#include "rlab/algebra/poly.hpp"

#include <algorithm>

#include "rlab/algebra/number_theory.hpp"
#include "rlab/errors.hpp"

namespace rlab {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  normalize();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr field, Elem c, int degree) {
  std::vector<Elem> v(static_cast<std::size_t>(degree) + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (!same_field(field_, o.field_)) throw InvalidInput("polynomials over different fields");
}

int Poly::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

Poly Poly::operator+(const Poly& o) const {
  check_same(o);
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  check_same(o);
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->sub(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->neg(c_[i]);
  return Poly(field_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
  }
  return Poly(field_, std::move(r));
}

Poly Poly::scaled(Elem s) const {
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->mul(c_[i], s);
  return Poly(field_, std::move(r));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<Elem> r;
  if (k >= 0) {
    r.assign(static_cast<std::size_t>(k), 0);
    r.insert(r.end(), c_.begin(), c_.end());
  } else if (static_cast<std::size_t>(-k) < c_.size()) {
    r.assign(c_.begin() - k, c_.end());
  }
  return Poly(field_, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& b) const {
  check_same(b);
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  std::vector<Elem> rem = c_;
  const int db = b.degree();
  const Elem lead_inv = field_->inv(b.leading());
  std::vector<Elem> quot(rem.size() >= b.c_.size() ? rem.size() - b.c_.size() + 1 : 0, 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
    Elem c = rem[k];
    if (c == 0) continue;
    Elem t = field_->mul(c, lead_inv);
    quot[k - db] = t;
    for (int i = 0; i <= db; ++i) rem[k - db + i] = field_->sub(rem[k - db + i], field_->mul(t, b.c_[i]));
  }
  rem.resize(std::min<std::size_t>(rem.size(), static_cast<std::size_t>(db)));
  return {Poly(field_, std::move(quot)), Poly(field_, std::move(rem))};
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

Elem Poly::eval(Elem at) const {
  Elem r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = field_->add(field_->mul(r, at), *it);
  return r;
}

Poly Poly::derivative() const {
  std::vector<Elem> r;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    Elem k = field_->from_int(static_cast<std::int64_t>(i));
    r.push_back(field_->mul(k, c_[i]));
  }
  return Poly(field_, std::move(r));
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    Elem c = c_[i];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    bool show_coeff = c != 1 || i == 0;
    if (show_coeff) s += (field_->is_prime_field() || field_->in_base(c)) ? std::to_string(c) : "[" + std::to_string(c) + "]";
    if (i >= 1) s += var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(m.field(), 1) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const auto& field = f.field();
  const std::uint64_t q = field->order();
  const Poly x = Poly::x(field);
  // x^{q^k} mod f by repeated q-th powering.
  auto frob_power = [&](int k) {
    Poly r = x % f;
    for (int i = 0; i < k; ++i) r = powmod(r, q, f);
    return r;
  };
  if (!((frob_power(n) - x) % f).is_zero()) return false;
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    Poly h = frob_power(n / static_cast<int>(r)) - x;
    if (gcd(f, h).degree() != 0) return false;
  }
  return true;
}

}  // namespace rlab
