#include <random>

#include "doctest.h"
#include "rlab/algebra/finite_field.hpp"
#include "rlab/algebra/group.hpp"
#include "rlab/algebra/matrix.hpp"
#include "rlab/algebra/norm_equation.hpp"
#include "rlab/algebra/number_theory.hpp"
#include "rlab/algebra/poly.hpp"
#include "rlab/errors.hpp"

using namespace rlab;

namespace {

// Schoolbook product in F_p[x]/(f) on coefficient vectors, independent of the
// log tables.
std::vector<int> naive_mul(const std::vector<int>& a, const std::vector<int>& b, const std::vector<Elem>& f, int p) {
  const int m = static_cast<int>(f.size()) - 1;
  std::vector<int> prod(2 * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int k = 2 * m - 1; k >= m; --k) {
    int c = prod[k];
    if (!c) continue;
    for (int i = 0; i <= m; ++i) prod[k - m + i] = ((prod[k - m + i] - c * static_cast<int>(f[i])) % p + p) % p;
  }
  prod.resize(m);
  return prod;
}

std::vector<int> digits(Elem a, int p, int m) {
  std::vector<int> d(m);
  for (int i = 0; i < m; ++i) {
    d[i] = static_cast<int>(a % p);
    a /= p;
  }
  return d;
}

// Elementary-divisor valuations from determinantal divisors: e_k = D_k - D_{k-1}
// where D_k is the least valuation of a k x k minor. Exact over F_q[y].
int poly_val(const Poly& p) { return p.is_zero() ? 1 << 20 : p.valuation(); }

Poly poly_det(std::vector<std::vector<Poly>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  Poly acc(m[0][0].field());
  for (int c = 0; c < n; ++c) {
    std::vector<std::vector<Poly>> minor;
    for (int r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (int j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    Poly t = m[0][c] * poly_det(minor);
    acc = (c % 2 == 0) ? acc + t : acc - t;
  }
  return acc;
}

std::vector<int> smith_oracle(const std::vector<std::vector<Poly>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> D(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    int best = 1 << 20;
    for (unsigned rs = 0; rs < (1u << n); ++rs) {
      if (__builtin_popcount(rs) != k) continue;
      for (unsigned cs = 0; cs < (1u << n); ++cs) {
        if (__builtin_popcount(cs) != k) continue;
        std::vector<std::vector<Poly>> sub;
        for (int r = 0; r < n; ++r) {
          if (!(rs >> r & 1)) continue;
          std::vector<Poly> row;
          for (int c = 0; c < n; ++c)
            if (cs >> c & 1) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        best = std::min(best, poly_val(poly_det(sub)));
      }
    }
    D[k] = best;
  }
  std::vector<int> e;
  for (int k = 1; k <= n; ++k) e.push_back(D[k] - D[k - 1]);
  return e;
}

SeriesMatrix to_series(const std::vector<std::vector<Poly>>& m, int prec) {
  const int n = static_cast<int>(m.size());
  SeriesMatrix s(m[0][0].field(), n, prec);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = TruncSeries(m[i][j].field(), m[i][j].coeffs(), prec);
  return s;
}

std::vector<std::vector<Poly>> poly_matmul(const std::vector<std::vector<Poly>>& a,
                                           const std::vector<std::vector<Poly>>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Poly>> r(n, std::vector<Poly>(n, Poly(a[0][0].field())));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

}  // namespace

TEST_CASE("field_make examples") {
  auto f2 = FiniteField::make(2, 1);
  CHECK(f2->order() == 2);
  CHECK(f2->is_prime_field());
  auto f13 = FiniteField::make(13, 1);
  CHECK(f13->order() == 13);
  auto f4 = FiniteField::make(2, 2, std::vector<Elem>{1, 1, 1});
  const Elem w = f4->generator();
  CHECK(f4->mul(w, w) == f4->add(w, 1));
  // Default modulus is the least irreducible: x^2+x+1, x^3+x+1, x^4+x+1.
  CHECK(FiniteField::make(2, 2)->modulus() == std::vector<Elem>{1, 1, 1});
  CHECK(FiniteField::make(2, 3)->modulus() == std::vector<Elem>{1, 1, 0, 1});
  CHECK(FiniteField::make(2, 4)->modulus() == std::vector<Elem>{1, 1, 0, 0, 1});
  CHECK_THROWS_AS(FiniteField::make(2, 2, std::vector<Elem>{1, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(FiniteField::make(4, 1), InvalidInput);
  CHECK_THROWS_AS(FiniteField::of_order(6), InvalidInput);
}

TEST_CASE("field multiplication matches schoolbook reduction") {
  for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 6}}) {
    auto f = FiniteField::make(p, m);
    for (Elem a = 0; a < f->order(); ++a)
      for (Elem b = 0; b < f->order(); ++b) {
        auto want = naive_mul(digits(a, p, m), digits(b, p, m), f->modulus(), p);
        auto got = digits(f->mul(a, b), p, m);
        REQUIRE(want == got);
      }
  }
}

TEST_CASE("field axioms on small fields") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 125u, 128u, 243u, 256u,
                          343u, 512u, 625u, 729u, 1024u}) {
    auto f = FiniteField::of_order(q);
    const Elem Q = f->order();
    for (Elem a = 0; a < Q; ++a) {
      REQUIRE(f->pow(a, Q) == a);
      REQUIRE(f->add(a, f->neg(a)) == 0);
      if (a) REQUIRE(f->mul(a, f->inv(a)) == 1);
    }
    if (Q <= 64) {
      for (Elem a = 0; a < Q; ++a)
        for (Elem b = 0; b < Q; ++b)
          for (Elem c = 0; c < Q; ++c) REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
    } else {
      std::mt19937 rng(7);
      for (int t = 0; t < 200000; ++t) {
        Elem a = rng() % Q, b = rng() % Q, c = rng() % Q;
        REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
    // Frobenius is a bijective ring map.
    std::vector<bool> hit(Q, false);
    for (Elem a = 0; a < Q; ++a) hit[f->pow(a, f->characteristic())] = true;
    for (bool h : hit) REQUIRE(h);
  }
}

TEST_CASE("tower fields keep base indices") {
  auto f4 = FiniteField::of_order(4);
  auto f16 = FiniteField::extend(f4, 2);
  CHECK(f16->order() == 16);
  CHECK(f16->absolute_degree() == 4);
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) CHECK(f16->mul(a, b) == f4->mul(a, b));
  for (Elem a = 0; a < 16; ++a) {
    CHECK(f16->in_base(f16->trace(a)));
    CHECK(f16->in_base(f16->norm(a)));
  }
}

TEST_CASE("polynomial division and irreducibility") {
  auto f = FiniteField::prime(5);
  std::mt19937 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::vector<Elem> a(rng() % 8), b(1 + rng() % 5);
    for (auto& c : a) c = rng() % 5;
    for (auto& c : b) c = rng() % 5;
    b.back() = 1 + rng() % 4;
    Poly A(f, a), B(f, b);
    auto [q, r] = A.divmod(B);
    CHECK(q * B + r == A);
    CHECK(r.degree() < B.degree());
    if (!A.is_zero()) CHECK((A * B).degree() == A.degree() + B.degree());
  }
  // Irreducible iff no root, for degrees 2 and 3.
  for (Elem c0 = 0; c0 < 5; ++c0)
    for (Elem c1 = 0; c1 < 5; ++c1)
      for (Elem c2 = 0; c2 < 5; ++c2) {
        Poly p(f, {c0, c1, c2, 1});
        bool root = false;
        for (Elem x = 0; x < 5; ++x) root |= p.eval(x) == 0;
        CHECK(is_irreducible(p) == !root);
      }
}

TEST_CASE("legendre and square roots of -1") {
  CHECK(legendre(5, 13) == -1);
  CHECK(legendre(13, 17) == 1);
  CHECK(legendre(0, 13) == 0);
  CHECK_THROWS_AS(legendre(3, 2), InvalidInput);
  CHECK_THROWS_AS(legendre(3, 15), InvalidInput);
  for (std::uint64_t q = 3; q <= 101; ++q) {
    if (!is_prime(q)) continue;
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(q); ++a)
      for (std::int64_t b = 1; b < static_cast<std::int64_t>(q); ++b)
        REQUIRE(legendre(a, q) * legendre(b, q) == legendre(a * b, q));
  }
  CHECK(sqrt_minus_one(13) == 5);
  CHECK(sqrt_minus_one(17) == 4);
  CHECK(sqrt_minus_one(5) == 2);
  CHECK_THROWS_AS(sqrt_minus_one(7), InvalidInput);
}

TEST_CASE("smith valuations examples") {
  auto f = FiniteField::prime(2);
  const int M = 8;
  for (int d = 1; d <= 4; ++d) {
    auto v = smith_valuations(SeriesMatrix::identity(f, d, M));
    CHECK(v == std::vector<int>(d, 0));
  }
  Poly one = Poly::constant(f, 1), y = Poly::x(f), zero(f);
  CHECK(smith_valuations(to_series({{one, zero}, {zero, y}}, M)) == std::vector<int>{0, 1});
  CHECK(smith_valuations(to_series({{y, one}, {zero, y}}, M)) == std::vector<int>{0, 2});
  CHECK(smith_oracle({{y, one}, {zero, y}}) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(smith_valuations(to_series({{y * y * y, zero}, {zero, one}}, 2)), InsufficientPrecision);
}

TEST_CASE("smith valuations agree with determinantal divisors and resist unimodular scrambling") {
  std::mt19937 rng(11);
  for (std::uint32_t q : {2u, 3u}) {
    auto f = FiniteField::prime(q);
    auto rand_poly = [&](int deg) {
      std::vector<Elem> c(deg + 1);
      for (auto& e : c) e = rng() % q;
      return Poly(f, c);
    };
    for (int t = 0; t < 60; ++t) {
      std::vector<std::vector<Poly>> m(3, std::vector<Poly>(3, Poly(f)));
      for (auto& row : m)
        for (auto& e : row) e = rand_poly(2).shifted(static_cast<int>(rng() % 2));
      if (poly_det(m).is_zero()) continue;
      auto want = smith_oracle(m);
      REQUIRE(smith_valuations(to_series(m, 16)) == want);
      // Unimodular over F_q[[y]]: unit constant determinant.
      for (int s = 0; s < 3; ++s) {
        std::vector<std::vector<Poly>> u(3, std::vector<Poly>(3, Poly(f)));
        do {
          for (auto& row : u)
            for (auto& e : row) e = rand_poly(1);
        } while (poly_det(u).coeff(0) == 0);
        auto left = poly_matmul(u, m);
        auto both = poly_matmul(left, u);
        CHECK(smith_valuations(to_series(left, 16)) == want);
        CHECK(smith_valuations(to_series(both, 16)) == want);
      }
    }
  }
}

TEST_CASE("norm equation over series") {
  auto f2 = FiniteField::prime(2);
  {
    auto f4 = FiniteField::extend(f2, 2);
    auto w = norm_equation_series(f4, 1);
    CHECK(w.coeffs() == std::vector<Elem>{1});
    auto w2 = norm_equation_series(f4, 2);
    CHECK(w2.coeff(0) == 1);
    const Elem om = w2.coeff(1);
    CHECK(f4->add(om, f4->mul(om, om)) == 1);
  }
  for (auto [q, d, M] : std::vector<std::tuple<int, int, int>>{{2, 3, 4}, {2, 3, 12}, {3, 2, 8}, {2, 4, 10}, {4, 3, 6}}) {
    auto fq = FiniteField::of_order(q);
    auto fqd = FiniteField::extend(fq, d);
    auto w = norm_equation_series(fqd, M);
    // Independent recomputation of the norm as a product of conjugates.
    TruncSeries n = TruncSeries::constant(fqd, 1, M);
    for (int i = 0; i < d; ++i) n = n * w.map([&](Elem c) { return fqd->frobenius(c, i); });
    CHECK(n.coeff(0) == 1);
    CHECK(n.coeff(1) == 1);
    for (int k = 2; k < M; ++k) CHECK(n.coeff(k) == 0);
  }
}

TEST_CASE("norm equation in the tensor ring") {
  auto f2 = FiniteField::prime(2);
  for (int d : {2, 3}) {
    auto fqd = FiniteField::extend(f2, d);
    auto fqe = FiniteField::extend(f2, 2, std::vector<Elem>{1, 1, 1});
    TensorRing ring(fqd, fqe);
    auto one = norm_equation_finite(ring, 1);
    CHECK(one.w == ring.one());
    const Elem beta = fqe->generator();
    const Elem target = fqe->add(1, beta);
    auto sol = norm_equation_finite(ring, target);
    CHECK(sol.exhaustive);
    CHECK(ring.norm(sol.w) == ring.scalar(target));
    if (d == 2) CHECK(sol.candidates_tried <= 16);
    // phi_hat^d = id and phi_hat is multiplicative.
    for (Elem a = 0; a < 16; ++a) {
      TensorRing::Element x = {a % 4, a / 4, 0};
      x.resize(d);
      CHECK(ring.phi(x, d) == x);
      CHECK(ring.phi(ring.mul(x, sol.w)) == ring.mul(ring.phi(x), ring.phi(sol.w)));
    }
  }
  auto fqe = FiniteField::extend(f2, 2);
  CHECK_THROWS_AS(norm_equation_finite(TensorRing(FiniteField::extend(f2, 2), fqe), 0), InvalidInput);
}

TEST_CASE("projective canonical form") {
  auto f13 = FiniteField::prime(13);
  CHECK(proj_canonical(FMatrix::scalar(f13, 3, 2)).matrix() == FMatrix::identity(f13, 3));
  auto f5 = FiniteField::prime(5);
  auto p = proj_canonical(FMatrix(f5, 2, 2, {0, 2, 3, 0}));
  CHECK(p.matrix() == FMatrix(f5, 2, 2, {0, 1, 4, 0}));
  CHECK(proj_canonical(p.matrix()) == p);
  CHECK_THROWS_AS(proj_canonical(FMatrix(f5, 2, 2, {1, 2, 2, 4})), InvalidInput);
}

TEST_CASE("matrix inverse and determinant") {
  std::mt19937 rng(5);
  auto f = FiniteField::of_order(9);
  for (int t = 0; t < 100; ++t) {
    FMatrix m(f, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = rng() % 9;
    FMatrix n(f, 4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) n(i, j) = rng() % 9;
    CHECK((m * n).det() == f->mul(m.det(), n.det()));
    if (m.det() != 0) {
      CHECK(m * m.inverse() == FMatrix::identity(f, 4));
      CHECK(m.rank() == 4);
    } else {
      CHECK(m.rank() < 4);
    }
  }
}

TEST_CASE("group closure") {
  auto f3 = FiniteField::prime(3);
  auto id = proj_canonical(FMatrix::identity(f3, 2));
  CHECK(group_closure({id}, 10).size() == 1);
  auto u = proj_canonical(FMatrix(f3, 2, 2, {1, 1, 0, 1}));
  auto s = proj_canonical(FMatrix(f3, 2, 2, {0, 1, 1, 0}));
  auto g = group_closure({u, s}, 100);
  CHECK(g.size() == 24);
  CHECK(pgl_order(2, 3) == 24);
  CHECK_THROWS_AS(group_closure({u, s}, 10), CapExceeded);
  // Lagrange on subgroups of PGL_2(F_5) and PGL_3(F_2).
  auto f5 = FiniteField::prime(5);
  auto a = proj_canonical(FMatrix(f5, 2, 2, {1, 1, 0, 1}));
  auto b = proj_canonical(FMatrix(f5, 2, 2, {2, 0, 0, 1}));
  auto c = proj_canonical(FMatrix(f5, 2, 2, {0, 1, 1, 0}));
  for (auto gens : std::vector<std::vector<ProjMatrix>>{{a}, {b}, {a, b}, {a, c}, {b, c}, {a, b, c}}) {
    auto h = group_closure(gens, 1000);
    CHECK(pgl_order(2, 5) % h.size() == 0);
  }
  // -1 is a square mod 5, so the swap stays inside PSL; diag(2,1) does not.
  CHECK(group_closure({a, c}, 1000).size() == psl_order(2, 5));
  CHECK(group_closure({a, b, c}, 1000).size() == pgl_order(2, 5));
  CHECK(pgl_order(3, 4) == 60480);
  CHECK(psl_order(3, 4) == 20160);
  CHECK(pgl_order(2, 16) == 4080);
}
