#include "rlab/building.hpp"

#include <algorithm>
#include <unordered_map>

#include "rlab/errors.hpp"
#include "rlab/spectra.hpp"

namespace rlab {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

void scale_column(SeriesMatrix& m, int c, const TruncSeries& s) {
  for (int r = 0; r < m.dim(); ++r) m(r, c) = m(r, c) * s;
}

// col_c -= s * col_i
void subtract_column(SeriesMatrix& m, int c, int i, const TruncSeries& s) {
  for (int r = 0; r < m.dim(); ++r) m(r, c) = m(r, c) - s * m(r, i);
}

void swap_columns(SeriesMatrix& m, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < m.dim(); ++r) std::swap(m(r, a), m(r, b));
}

}  // namespace

const std::vector<Elem>& LatticeClass::entry(int r, int c) const {
  if (r >= c || c >= dim()) throw InvalidInput("lattice class entry index must satisfy r < c < d");
  const int d = dim();
  return upper_[static_cast<std::size_t>(r) * d + c];
}

int LatticeClass::color() const {
  int s = 0;
  for (int x : a_) s += x;
  return s % dim();
}

SeriesMatrix LatticeClass::matrix(const FieldPtr& field, int precision) const {
  const int d = dim();
  for (int x : a_)
    if (x >= precision) throw InsufficientPrecision("precision too small for the lattice representative");
  SeriesMatrix m(field, d, precision);
  for (int c = 0; c < d; ++c) {
    m(c, c) = TruncSeries::monomial(field, 1, a_[c], precision);
    for (int r = 0; r < c; ++r) m(r, c) = TruncSeries(field, entry(r, c), precision);
  }
  return m;
}

std::string LatticeClass::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
  s += "]";
  for (int c = 0; c < dim(); ++c)
    for (int r = 0; r < c; ++r) {
      const auto& e = entry(r, c);
      if (std::all_of(e.begin(), e.end(), [](Elem x) { return x == 0; })) continue;
      s += " (" + std::to_string(r) + "," + std::to_string(c) + "):";
      for (Elem x : e) s += " " + std::to_string(x);
    }
  return s;
}

LatticeClass lattice_class(const SeriesMatrix& g) {
  const int d = g.dim();
  if (d < 1) throw InvalidInput("empty matrix");
  const FieldPtr& F = g.field();
  SeriesMatrix w = g;
  std::vector<int> a(static_cast<std::size_t>(d), 0);
  for (int i = d - 1; i >= 0; --i) {
    int best = -1, best_v = 0, unknown = 1 << 30;
    for (int c = 0; c <= i; ++c) {
      auto v = w(i, c).valuation();
      if (!v) {
        unknown = std::min(unknown, w(i, c).precision());
      } else if (best < 0 || *v < best_v) {
        best = c;
        best_v = *v;
      }
    }
    if (best < 0 || unknown <= best_v) throw InsufficientPrecision("lattice pivot undetermined at this precision");
    swap_columns(w, best, i);
    scale_column(w, i, w(i, i).divided_by_y(best_v).inverse());
    w(i, i) = TruncSeries::monomial(F, 1, best_v, w(i, i).precision());
    for (int c = 0; c < i; ++c) {
      if (w(i, c).is_zero()) continue;
      subtract_column(w, c, i, w(i, c).divided_by_y(best_v));
      w(i, c) = TruncSeries(F, w(i, c).precision());
    }
    a[i] = best_v;
  }
  // Reduce entries above the diagonal modulo the diagonal power of their row.
  for (int c = 1; c < d; ++c)
    for (int r = c - 1; r >= 0; --r) {
      const TruncSeries& e = w(r, c);
      if (e.precision() < a[r]) throw InsufficientPrecision("entry precision below the diagonal exponent");
      TruncSeries high = e;
      for (int k = 0; k < std::min(a[r], e.precision()); ++k) high.set(k, 0);
      if (high.is_zero()) continue;
      subtract_column(w, c, r, high.divided_by_y(a[r]));
    }
  LatticeClass out;
  int m = *std::min_element(a.begin(), a.end());
  std::vector<std::vector<Elem>> upper(static_cast<std::size_t>(d) * d);
  for (int c = 1; c < d; ++c)
    for (int r = 0; r < c; ++r) {
      const TruncSeries& e = w(r, c);
      if (e.precision() < a[r]) throw InsufficientPrecision("entry precision below the diagonal exponent");
      auto& u = upper[static_cast<std::size_t>(r) * d + c];
      u.assign(static_cast<std::size_t>(a[r]), 0);
      for (int k = 0; k < a[r]; ++k) {
        u[k] = e.coeff(k);
        if (u[k] != 0) m = std::min(m, k);
      }
    }
  // Primitive scaling: divide by y^m, m = least valuation of any entry.
  for (int& x : a) x -= m;
  for (int c = 1; c < d; ++c)
    for (int r = 0; r < c; ++r) {
      auto& u = upper[static_cast<std::size_t>(r) * d + c];
      u.erase(u.begin(), u.begin() + m);
    }
  out.a_ = a;
  out.upper_ = std::move(upper);
  out.key_.push_back(static_cast<std::uint32_t>(d));
  for (int x : a) out.key_.push_back(static_cast<std::uint32_t>(x));
  for (int c = 1; c < d; ++c)
    for (int r = 0; r < c; ++r)
      for (Elem x : out.upper_[static_cast<std::size_t>(r) * d + c]) out.key_.push_back(x);
  return out;
}

int vertex_color(const SeriesMatrix& g) {
  int s = 0;
  for (int v : smith_valuations(g)) s += v;
  return s % g.dim();
}

Adjacency adjacency_type(const SeriesMatrix& g) {
  auto s = smith_valuations(g);
  const int m = s.front();
  int ones = 0;
  bool small = true;
  for (int v : s) {
    if (v - m == 1) ++ones;
    else if (v - m != 0) small = false;
  }
  if (!small) return {AdjacencyKind::NotAdjacent, 0};
  if (ones == 0) return {AdjacencyKind::Same, 0};
  return {AdjacencyKind::Adjacent, ones};
}

std::string to_string(const Adjacency& a) {
  switch (a.kind) {
    case AdjacencyKind::Same: return "same";
    case AdjacencyKind::Adjacent: return "adjacent, color " + std::to_string(a.color);
    case AdjacencyKind::NotAdjacent: return "not adjacent";
  }
  return "?";
}

std::vector<std::pair<SeriesMatrix, int>> neighbor_moves(const FieldPtr& fq, int d, int precision) {
  const std::uint32_t q = fq->order();
  std::vector<std::pair<SeriesMatrix, int>> out;
  for (int w = 1; w < d; ++w) {
    // pivot sets in lexicographic order
    std::vector<int> piv(static_cast<std::size_t>(w));
    for (int t = 0; t < w; ++t) piv[t] = t;
    for (;;) {
      std::vector<char> is_piv(static_cast<std::size_t>(d), 0);
      for (int p : piv) is_piv[p] = 1;
      std::vector<std::pair<int, int>> free;  // (row t, column j)
      for (int t = 0; t < w; ++t)
        for (int j = piv[t] + 1; j < d; ++j)
          if (!is_piv[j]) free.emplace_back(t, j);
      std::vector<Elem> val(free.size(), 0);
      for (;;) {
        FMatrix c0(fq, d, d), c1(fq, d, d);
        for (int t = 0; t < w; ++t) c0(piv[t], t) = 1;
        for (std::size_t f = 0; f < free.size(); ++f) c0(free[f].second, free[f].first) = val[f];
        int col = w;
        for (int j = 0; j < d; ++j)
          if (!is_piv[j]) c1(j, col++) = 1;
        out.emplace_back(SeriesMatrix::from_coefficients({c0, c1}, precision), d - w);
        std::size_t k = 0;
        while (k < val.size() && ++val[k] == q) val[k++] = 0;
        if (k == val.size()) break;
      }
      int t = w - 1;
      while (t >= 0 && piv[t] == d - w + t) --t;
      if (t < 0) break;
      ++piv[t];
      for (int u = t + 1; u < w; ++u) piv[u] = piv[u - 1] + 1;
    }
  }
  return out;
}

BuildingBall building_ball(int d, std::uint64_t q, int r, std::size_t cap) {
  if (d < 2) throw InvalidInput("building needs d >= 2");
  if (r < 0) throw InvalidInput("radius must be nonnegative");
  auto fq = FiniteField::of_order(q);
  BuildingBall ball;
  ball.d = d;
  ball.q = static_cast<int>(q);
  ball.r = r;
  int precision = 4 * d + 2 * r;
  std::unordered_map<std::vector<std::uint32_t>, int, KeyHash> index;
  auto add = [&](LatticeClass c, int dist) {
    if (ball.classes.size() >= cap) throw CapExceeded("building ball exceeds vertex cap");
    const int id = static_cast<int>(ball.classes.size());
    index.emplace(c.key(), id);
    ball.tau.push_back(c.color());
    ball.classes.push_back(std::move(c));
    ball.distance.push_back(dist);
    return id;
  };
  add(lattice_class(SeriesMatrix::identity(fq, d, precision)), 0);
  auto moves = neighbor_moves(fq, d, precision);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t u = 0; u < ball.classes.size(); ++u) {
    for (std::size_t j = 0; j < moves.size(); ++j) {
      const int col = moves[j].second;
      LatticeClass nb;
      try {
        nb = lattice_class(ball.classes[u].matrix(fq, precision) * moves[j].first);
      } catch (const InsufficientPrecision&) {
        // one retry at doubled precision, then give up
        precision *= 2;
        moves = neighbor_moves(fq, d, precision);
        nb = lattice_class(ball.classes[u].matrix(fq, precision) * moves[j].first);
      }
      auto it = index.find(nb.key());
      int v;
      if (it != index.end()) {
        v = it->second;
      } else if (ball.distance[u] < r) {
        v = add(std::move(nb), ball.distance[u] + 1);
      } else {
        continue;
      }
      if (((ball.tau[v] - ball.tau[u] - col) % d + d) % d != 0)
        throw VerificationFailure("edge color differs from the color difference of its endpoints");
      const std::pair<int, int> key = std::minmax(static_cast<int>(u), v);
      const int forward = static_cast<int>(u) < v ? col : (d - col) % d;
      auto [pos, inserted] = ball.edge_color.emplace(key, forward);
      if (!inserted && pos->second != forward) throw VerificationFailure("edge colors are not antisymmetric");
      if (inserted) edges.push_back(key);
    }
  }
  auto g = Graph::from_edges(static_cast<int>(ball.classes.size()), edges);
  ball.complex = clique_complex(g, d - 1);
  ball.sphere_sizes.assign(static_cast<std::size_t>(r) + 1, 0);
  for (int x : ball.distance) ++ball.sphere_sizes[x];
  return ball;
}

LinkCounts link_counts(const SimplicialComplex& X, int v) {
  LinkCounts c;
  for (int k = 1; k <= std::min(2, X.dim()); ++k)
    for (std::size_t i = 0; i < X.count(k); ++i) {
      auto f = X.face(k, i);
      if (std::find(f.begin(), f.end(), v) == f.end()) continue;
      (k == 1 ? c.vertices : c.edges)++;
    }
  return c;
}

std::vector<SparseMatrix> hecke_from_tables(int n, const std::vector<std::vector<std::vector<int>>>& tables) {
  const int m = static_cast<int>(tables.size());
  const int d = m + 1;
  std::vector<SparseMatrix> A;
  for (const auto& table : tables) {
    if (static_cast<int>(table.size()) != n) throw InvalidInput("table size differs from vertex count");
    std::vector<std::tuple<int, int, std::int64_t>> tr;
    for (int x = 0; x < n; ++x)
      for (int y : table[x]) {
        if (y < 0 || y >= n) throw VerificationFailure("vertex set not closed under the generators");
        tr.emplace_back(x, y, 1);
      }
    A.push_back(SparseMatrix::from_triplets(n, n, std::move(tr)));
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!(A[i] * A[j] == A[j] * A[i])) throw VerificationFailure("Hecke operators do not commute");
  for (int k = 1; k < d; ++k)
    if (!(A[k - 1].transpose() == A[d - k - 1])) throw VerificationFailure("A_k transpose differs from A_{d-k}");
  return A;
}

std::vector<SparseMatrix> hecke_matrices(const MatrixGroup& group, const std::vector<std::vector<ProjMatrix>>& sigma) {
  const int m = static_cast<int>(sigma.size());
  const int d = m + 1;
  for (int k = 1; k < d; ++k) {
    std::vector<ProjMatrix> inv;
    for (const auto& s : sigma[k - 1]) inv.push_back(s.inverse());
    std::sort(inv.begin(), inv.end());
    auto other = sigma[d - k - 1];
    std::sort(other.begin(), other.end());
    if (!(inv == other)) throw VerificationFailure("Sigma_{d-k} is not Sigma_k inverted");
  }
  std::vector<std::vector<std::vector<int>>> tables;
  for (const auto& s : sigma) tables.push_back(right_multiplication_table(group, s));
  return hecke_from_tables(static_cast<int>(group.size()), tables);
}

}  // namespace rlab
