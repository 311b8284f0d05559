#include "rlab/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "rlab/errors.hpp"

namespace rlab {

namespace {

bool lex_less(std::span<const int> a, std::span<const int> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(int n, const std::vector<std::vector<int>>& faces) {
  if (n < 0) throw InvalidInput("negative vertex count");
  std::vector<std::set<std::vector<int>>> sets(n > 0 ? 1 : 0);
  for (int v = 0; v < n; ++v) sets[0].insert({v});
  for (auto f : faces) {
    if (f.empty()) continue;
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvalidInput("face with a repeated vertex");
    if (f.front() < 0 || f.back() >= n) throw InvalidInput("face vertex out of range");
    if (f.size() > 20) throw CapExceeded("face dimension too large for subset closure");
    const unsigned m = static_cast<unsigned>(f.size());
    if (sets.size() < m) sets.resize(m);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<int> sub;
      for (unsigned j = 0; j < m; ++j)
        if (mask >> j & 1u) sub.push_back(f[j]);
      sets[sub.size() - 1].insert(std::move(sub));
    }
  }
  SimplicialComplex X;
  X.n_ = n;
  for (const auto& s : sets) {
    std::vector<int> flat;
    for (const auto& f : s) flat.insert(flat.end(), f.begin(), f.end());
    X.levels_.push_back(std::move(flat));
  }
  return X;
}

SimplicialComplex SimplicialComplex::from_graph(const Graph& g) {
  std::vector<std::vector<int>> faces;
  for (auto [u, v] : g.edges()) faces.push_back({u, v});
  return from_faces(g.n(), faces);
}

SimplicialComplex SimplicialComplex::from_sorted_levels(int n, std::vector<std::vector<int>> levels) {
  SimplicialComplex X;
  X.n_ = n;
  X.levels_ = std::move(levels);
  while (!X.levels_.empty() && X.levels_.back().empty()) X.levels_.pop_back();
  if (n > 0 && (X.levels_.empty() || X.levels_[0].size() != static_cast<std::size_t>(n)))
    throw InvalidInput("vertex level must list every vertex");
  for (int k = 0; k <= X.dim(); ++k) {
    if (X.levels_[k].size() % static_cast<std::size_t>(k + 1) != 0) throw InvalidInput("ragged face level");
    for (std::size_t i = 0; i < X.count(k); ++i) {
      auto f = X.face(k, i);
      for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j] < 0 || f[j] >= n) throw InvalidInput("face vertex out of range");
        if (j && f[j - 1] >= f[j]) throw InvalidInput("face not strictly increasing");
      }
      if (i && !lex_less(X.face(k, i - 1), f)) throw InvalidInput("faces not in lexicographic order");
      if (k > 0) {
        std::vector<int> sub(f.begin() + 1, f.end());
        for (std::size_t drop = 0; drop <= static_cast<std::size_t>(k); ++drop) {
          if (drop) sub[drop - 1] = f[drop - 1];
          if (!X.index_of(k - 1, sub)) throw InvalidInput("complex is not closed under subsets");
        }
      }
    }
  }
  return X;
}

std::size_t SimplicialComplex::count(int k) const {
  if (k == -1) return 1;
  if (k < -1 || k > dim()) return 0;
  return levels_[k].size() / static_cast<std::size_t>(k + 1);
}

std::span<const int> SimplicialComplex::face(int k, std::size_t i) const {
  if (k == -1) return {};
  const std::size_t w = static_cast<std::size_t>(k + 1);
  return std::span<const int>(levels_.at(k).data() + i * w, w);
}

std::vector<int> SimplicialComplex::face_vec(int k, std::size_t i) const {
  auto f = face(k, i);
  return {f.begin(), f.end()};
}

std::optional<std::size_t> SimplicialComplex::index_of(int k, std::span<const int> f) const {
  if (k == -1) return f.empty() ? std::optional<std::size_t>(0) : std::nullopt;
  if (k < 0 || k > dim() || f.size() != static_cast<std::size_t>(k + 1)) return std::nullopt;
  std::size_t lo = 0, hi = count(k);
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (lex_less(face(k, mid), f))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count(k) && std::equal(f.begin(), f.end(), face(k, lo).begin())) return lo;
  return std::nullopt;
}

bool SimplicialComplex::contains(std::span<const int> f) const {
  return index_of(static_cast<int>(f.size()) - 1, f).has_value();
}

Graph SimplicialComplex::skeleton() const {
  std::vector<std::pair<int, int>> e;
  for (std::size_t i = 0; i < count(1); ++i) e.emplace_back(face(1, i)[0], face(1, i)[1]);
  return Graph::from_edges(n_, e);
}

bool SimplicialComplex::has_complete_skeleton(int k) const {
  if (k < 0) return true;
  // C(n, k+1) faces are required.
  long double need = 1;
  for (int j = 0; j <= k; ++j) need = need * (n_ - j) / (j + 1);
  return static_cast<long double>(count(k)) + 0.5L >= need && n_ >= k + 1;
}

std::vector<int> SimplicialComplex::up_degrees(int k) const {
  std::vector<int> deg(count(k), 0);
  if (k + 1 > dim()) return deg;
  std::vector<int> sub(static_cast<std::size_t>(k + 1));
  for (std::size_t i = 0; i < count(k + 1); ++i) {
    auto f = face(k + 1, i);
    for (int drop = 0; drop <= k + 1; ++drop) {
      int w = 0;
      for (int j = 0; j <= k + 1; ++j)
        if (j != drop) sub[w++] = f[j];
      ++deg[*index_of(k, sub)];
    }
  }
  return deg;
}

SimplicialComplex complete_complex(int n, int max_dim) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return clique_complex(Graph::from_edges(n, e), max_dim);
}

SimplicialComplex clique_complex(const Graph& g, int max_dim, std::size_t cap) {
  if (max_dim < 0) throw InvalidInput("max_dim must be nonnegative");
  std::vector<std::vector<int>> levels;
  std::vector<int> v0(g.n());
  for (int v = 0; v < g.n(); ++v) v0[v] = v;
  levels.push_back(std::move(v0));
  std::size_t total = static_cast<std::size_t>(g.n());
  for (int k = 1; k <= max_dim; ++k) {
    const auto& prev = levels.back();
    const std::size_t w = static_cast<std::size_t>(k);
    std::vector<int> next;
    for (std::size_t i = 0; i * w < prev.size(); ++i) {
      const int* f = prev.data() + i * w;
      for (int v : g.neighbors(f[w - 1])) {
        if (v <= f[w - 1]) continue;
        bool ok = true;
        for (std::size_t j = 0; j + 1 < w && ok; ++j) ok = g.has_edge(f[j], v);
        if (!ok) continue;
        next.insert(next.end(), f, f + w);
        next.push_back(v);
        if (++total > cap) throw CapExceeded("clique complex exceeded " + std::to_string(cap) + " faces");
      }
    }
    if (next.empty()) break;
    levels.push_back(std::move(next));
  }
  return SimplicialComplex::from_sorted_levels(g.n(), std::move(levels));
}

int incidence(std::span<const int> F, std::span<const int> G) {
  if (F.size() != G.size() + 1) throw InvalidInput("incidence needs faces of consecutive dimensions");
  std::size_t l = 0, j = 0;
  int missing = -1;
  while (l < F.size()) {
    if (j < G.size() && F[l] == G[j]) {
      ++l;
      ++j;
    } else {
      if (missing >= 0) return 0;
      missing = static_cast<int>(l);
      ++l;
    }
  }
  if (j != G.size() || missing < 0) return 0;
  return missing % 2 == 0 ? 1 : -1;
}

SparseMatrix boundary_matrix(const SimplicialComplex& X, int i, Coefficients mode) {
  if (i < 0 || i > X.dim()) throw InvalidInput("boundary dimension out of range");
  std::vector<std::tuple<int, int, std::int64_t>> t;
  std::vector<int> sub(static_cast<std::size_t>(i));
  for (std::size_t c = 0; c < X.count(i); ++c) {
    auto f = X.face(i, c);
    for (int drop = 0; drop <= i; ++drop) {
      int w = 0;
      for (int j = 0; j <= i; ++j)
        if (j != drop) sub[w++] = f[j];
      auto r = X.index_of(i - 1, sub);
      if (!r) throw VerificationFailure("complex not closed under subsets");
      std::int64_t s = drop % 2 == 0 ? 1 : -1;
      if (mode == Coefficients::F2) s = 1;
      t.emplace_back(static_cast<int>(*r), static_cast<int>(c), s);
    }
  }
  return SparseMatrix::from_triplets(static_cast<int>(X.count(i - 1)), static_cast<int>(X.count(i)), std::move(t));
}

SparseMatrix coboundary_matrix(const SimplicialComplex& X, int i, Coefficients mode) {
  if (i < -1) throw InvalidInput("coboundary dimension out of range");
  if (i + 1 > X.dim()) return SparseMatrix::from_triplets(0, static_cast<int>(X.count(i)), {});
  return boundary_matrix(X, i + 1, mode).transpose();
}

SparseMatrix laplacian(const SimplicialComplex& X, int i, LaplacianPart part) {
  if (i < 0 || i > X.dim()) throw InvalidInput("laplacian dimension out of range");
  const int n = static_cast<int>(X.count(i));
  SparseMatrix up = SparseMatrix::from_triplets(n, n, {}), down = up;
  if (part != LaplacianPart::Down && i + 1 <= X.dim()) {
    auto b = boundary_matrix(X, i + 1);
    up = b * b.transpose();
  }
  if (part != LaplacianPart::Up) {
    auto b = boundary_matrix(X, i);
    down = b.transpose() * b;
  }
  return up + down;
}

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64),
      bits_(static_cast<std::size_t>(rows) * static_cast<std::size_t>((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::from_sparse(const SparseMatrix& m) {
  BitMatrix b(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (auto k = m.row_ptr()[r]; k < m.row_ptr()[r + 1]; ++k)
      if (m.values()[k] % 2 != 0) b.set(r, m.col_index()[k], true);
  return b;
}

void BitMatrix::set(int r, int c, bool v) {
  std::uint64_t& w = row(r)[c >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (c & 63);
  w = v ? (w | bit) : (w & ~bit);
}

std::vector<int> BitMatrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (get(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int w = 0; w < words_; ++w) std::swap(row(piv)[w], row(r)[w]);
    for (int i = 0; i < rows_; ++i)
      if (i != r && get(i, c))
        for (int w = 0; w < words_; ++w) row(i)[w] ^= row(r)[w];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int BitMatrix::rank() const {
  BitMatrix t = *this;
  return static_cast<int>(t.rref().size());
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.rows_) throw InvalidInput("bit matrix shape mismatch");
  BitMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k)
      if (get(i, k))
        for (int w = 0; w < r.words_; ++w) r.row(i)[w] ^= o.row(k)[w];
  return r;
}

bool BitMatrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

int rank_f2(const SparseMatrix& m) { return BitMatrix::from_sparse(m).rank(); }

int betti_f2(const SimplicialComplex& X, int i, bool reduced) {
  if (i < 0 || i > X.dim()) return 0;
  const int dim_ci = static_cast<int>(X.count(i));
  const int rank_out = rank_f2(coboundary_matrix(X, i, Coefficients::F2));
  const int rank_in = (i > 0 || reduced) ? rank_f2(coboundary_matrix(X, i - 1, Coefficients::F2)) : 0;
  return dim_ci - rank_out - rank_in;
}

int homology_f2(const SimplicialComplex& X, int i, bool reduced) {
  if (i < 0 || i > X.dim()) return 0;
  const int dim_ci = static_cast<int>(X.count(i));
  const int rank_out = (i > 0 || reduced) ? rank_f2(boundary_matrix(X, i, Coefficients::F2)) : 0;
  const int rank_in = i + 1 <= X.dim() ? rank_f2(boundary_matrix(X, i + 1, Coefficients::F2)) : 0;
  return dim_ci - rank_out - rank_in;
}

}  // namespace rlab
