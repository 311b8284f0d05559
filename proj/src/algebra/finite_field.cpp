#include "rlab/algebra/finite_field.hpp"

#include <string>

#include "rlab/algebra/number_theory.hpp"
#include "rlab/algebra/poly.hpp"
#include "rlab/errors.hpp"

namespace rlab {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::vector<Elem> normalize_modulus(const FieldPtr& base, int degree, std::vector<Elem> mod) {
  if (static_cast<int>(mod.size()) == degree) mod.push_back(1);
  if (static_cast<int>(mod.size()) != degree + 1)
    throw InvalidInput("modulus length does not match extension degree " + std::to_string(degree));
  for (Elem c : mod)
    if (c >= base->order()) throw InvalidInput("modulus coefficient outside the base field");
  if (mod.back() == 0) throw InvalidInput("modulus has zero leading coefficient");
  Elem lead_inv = base->inv(mod.back());
  for (Elem& c : mod) c = base->mul(c, lead_inv);
  return mod;
}

std::vector<Elem> least_irreducible(const FieldPtr& base, int degree) {
  const std::uint64_t b = base->order();
  std::uint64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= b;
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<Elem> c(degree + 1);
    std::uint64_t t = v;
    for (int i = 0; i < degree; ++i) {
      c[i] = static_cast<Elem>(t % b);
      t /= b;
    }
    c[degree] = 1;
    if (degree > 1 && c[0] == 0) continue;
    if (is_irreducible(Poly(base, c))) return c;
  }
  throw VerificationFailure("no irreducible polynomial found");
}

}  // namespace

FieldPtr FiniteField::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (p > kMaxOrder) throw CapExceeded("prime field too large for table arithmetic");
  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->p_ = p;
  f->order_ = p;
  f->degree_ = 1;
  f->build_tables();
  return f;
}

FieldPtr FiniteField::make(std::uint32_t p, int m, std::optional<std::vector<Elem>> modulus) {
  auto fp = prime(p);
  if (m == 1 && !modulus) return fp;
  return extend(fp, m, std::move(modulus));
}

FieldPtr FiniteField::extend(const FieldPtr& base, int degree, std::optional<std::vector<Elem>> modulus) {
  if (!base) throw InvalidInput("extension of a null field");
  if (degree < 1) throw InvalidInput("extension degree must be positive");
  std::uint64_t order = 1;
  for (int i = 0; i < degree; ++i) {
    order *= base->order();
    if (order > kMaxOrder) throw CapExceeded("field order exceeds table limit " + std::to_string(kMaxOrder));
  }
  std::vector<Elem> mod;
  if (modulus) {
    mod = normalize_modulus(base, degree, std::move(*modulus));
    if (!is_irreducible(Poly(base, mod)))
      throw InvalidInput("modulus " + Poly(base, mod).to_string() + " is reducible over " + base->describe());
  } else {
    if (degree == 1) return base;
    mod = least_irreducible(base, degree);
  }
  auto f = std::shared_ptr<FiniteField>(new FiniteField());
  f->p_ = base->characteristic();
  f->order_ = static_cast<std::uint32_t>(order);
  f->degree_ = degree;
  f->base_ = base;
  f->modulus_ = std::move(mod);
  f->build_tables();
  return f;
}

FieldPtr FiniteField::of_order(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw InvalidInput(std::to_string(q) + " is not a prime power");
  if (q > kMaxOrder) throw CapExceeded("field order exceeds table limit " + std::to_string(kMaxOrder));
  return make(pp->first, pp->second);
}

int FiniteField::absolute_degree() const { return base_ ? degree_ * base_->absolute_degree() : 1; }

Elem FiniteField::slow_mul(Elem a, Elem b) const {
  const int m = degree_;
  auto ca = coords(a), cb = coords(b);
  std::vector<Elem> prod(2 * m - 1, 0);
  for (int i = 0; i < m; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < m; ++j) prod[i + j] = base_->add(prod[i + j], base_->mul(ca[i], cb[j]));
  }
  for (int k = 2 * m - 2; k >= m; --k) {
    Elem c = prod[k];
    if (c == 0) continue;
    for (int i = 0; i < m; ++i) prod[k - m + i] = base_->sub(prod[k - m + i], base_->mul(c, modulus_[i]));
    prod[k] = 0;
  }
  return from_coords(std::span<const Elem>(prod.data(), m));
}

void FiniteField::build_tables() {
  const std::uint64_t group = order_ - 1;
  if (base_ && p_ != 2 && order_ <= 1024) {
    add_table_.assign(static_cast<std::size_t>(order_) * order_, 0);
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b) {
        Elem r = 0, scale = 1, x = a, y = b;
        const Elem bo = base_order();
        for (int i = 0; i < degree_; ++i) {
          r += base_->add(x % bo, y % bo) * scale;
          x /= bo;
          y /= bo;
          scale *= bo;
        }
        add_table_[static_cast<std::size_t>(a) * order_ + b] = r;
      }
  }
  auto mul_slow = [&](Elem a, Elem b) -> Elem {
    if (!base_) return static_cast<Elem>(mulmod(a, b, p_));
    return slow_mul(a, b);
  };
  auto pow_slow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  const auto factors = prime_factors(group);
  Elem g = 0;
  for (Elem c = 1; c < order_; ++c) {
    bool primitive = true;
    for (auto r : factors)
      if (pow_slow(c, group / r) == 1) {
        primitive = false;
        break;
      }
    if (primitive) {
      g = c;
      break;
    }
  }
  if (g == 0) throw VerificationFailure("no primitive element found in " + describe());
  exp_.resize(group);
  log_.assign(order_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_slow(cur, g);
  }
  if (cur != 1) throw VerificationFailure("multiplicative group table did not close in " + describe());
}

Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (!base_) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * order_ + b];
  const Elem bo = base_order();
  Elem r = 0, scale = 1;
  for (int i = 0; i < degree_; ++i) {
    r += base_->add(a % bo, b % bo) * scale;
    a /= bo;
    b /= bo;
    scale *= bo;
  }
  return r;
}

Elem FiniteField::neg(Elem a) const {
  if (p_ == 2 || a == 0) return a;
  if (!base_) return p_ - a;
  const Elem bo = base_order();
  Elem r = 0, scale = 1;
  for (int i = 0; i < degree_; ++i) {
    r += base_->neg(a % bo) * scale;
    a /= bo;
    scale *= bo;
  }
  return r;
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw InvalidInput("inverse of zero in " + describe());
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : order_ - 1 - l];
}

Elem FiniteField::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw InvalidInput("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = order_ - 1;
  std::int64_t r = static_cast<std::int64_t>(static_cast<__int128>(log_[a]) * (e % n) % n);
  if (r < 0) r += n;
  return exp_[static_cast<std::size_t>(r)];
}

std::uint32_t FiniteField::log(Elem a) const {
  if (a == 0) throw InvalidInput("log of zero");
  return log_[a];
}

Elem FiniteField::frobenius(Elem a, int times) const {
  if (a == 0 || !base_) return a;
  const std::uint64_t n = order_ - 1;
  std::uint64_t e = 1;
  times %= degree_;
  if (times < 0) times += degree_;
  for (int i = 0; i < times; ++i) e = mulmod(e, base_order(), n);
  return exp_[mulmod(log_[a], e, n)];
}

Elem FiniteField::trace(Elem a) const {
  Elem s = 0;
  for (int i = 0; i < degree_; ++i) s = add(s, frobenius(a, i));
  return s;
}

Elem FiniteField::norm(Elem a) const {
  Elem s = 1;
  for (int i = 0; i < degree_; ++i) s = mul(s, frobenius(a, i));
  return s;
}

std::vector<Elem> FiniteField::coords(Elem a) const {
  std::vector<Elem> c(degree_);
  const Elem bo = base_order();
  if (!base_) {
    c[0] = a;
    return c;
  }
  for (int i = 0; i < degree_; ++i) {
    c[i] = a % bo;
    a /= bo;
  }
  return c;
}

Elem FiniteField::from_coords(std::span<const Elem> c) const {
  if (!base_) return c.empty() ? 0 : c[0];
  Elem r = 0, scale = 1;
  const Elem bo = base_order();
  for (int i = 0; i < degree_ && i < static_cast<int>(c.size()); ++i) {
    r += c[i] * scale;
    scale *= bo;
  }
  return r;
}

Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

bool FiniteField::is_square(Elem a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

bool FiniteField::same_as(const FiniteField& o) const {
  if (this == &o) return true;
  if (order_ != o.order_ || p_ != o.p_ || degree_ != o.degree_ || modulus_ != o.modulus_) return false;
  if (!base_ || !o.base_) return !base_ && !o.base_;
  return base_->same_as(*o.base_);
}

std::string FiniteField::describe() const {
  if (!base_) return "F_" + std::to_string(p_);
  return base_->describe() + "[x]/(" + Poly(base_, modulus_).to_string() + ")";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

}  // namespace rlab
