#include "rlab/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "rlab/errors.hpp"
#include "rlab/spectra.hpp"

namespace rlab {

namespace {

Ratio make_ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvalidInput("ratio with nonpositive denominator");
  const std::int64_t g = std::gcd(num, den);
  return g ? Ratio{num / g, den / g} : Ratio{0, 1};
}

constexpr int kMaxGraphCheeger = 24;
constexpr int kMaxPartition = 14;
constexpr int kMaxCochain = 22;
constexpr double kMaxOverlapWork = 2e9;

// Xor basis over F2 on bitmasks, with the combination of inputs producing
// each basis vector.
struct XorBasis {
  std::vector<std::uint32_t> vec, combo;
  std::vector<int> pivot;

  void add(std::uint32_t v, std::uint32_t c) {
    for (std::size_t k = 0; k < vec.size(); ++k)
      if (v >> pivot[k] & 1u) {
        v ^= vec[k];
        c ^= combo[k];
      }
    if (!v) return;
    const int p = 31 - std::countl_zero(v);
    // keep reduced: clear the new pivot from existing vectors
    for (std::size_t k = 0; k < vec.size(); ++k)
      if (vec[k] >> p & 1u) {
        vec[k] ^= v;
        combo[k] ^= c;
      }
    vec.push_back(v);
    combo.push_back(c);
    pivot.push_back(p);
  }
  // Canonical representative of v modulo the span, plus the combination that
  // was removed.
  std::pair<std::uint32_t, std::uint32_t> reduce(std::uint32_t v) const {
    std::uint32_t c = 0;
    for (std::size_t k = 0; k < vec.size(); ++k)
      if (v >> pivot[k] & 1u) {
        v ^= vec[k];
        c ^= combo[k];
      }
    return {v, c};
  }
};

std::vector<int> support(std::uint32_t m) {
  std::vector<int> s;
  for (int b = 0; b < 32; ++b)
    if (m >> b & 1u) s.push_back(b);
  return s;
}

// Cofaces (as i-face indices) of each (i-1)-face.
std::vector<std::vector<int>> cofaces(const SimplicialComplex& X, int i) {
  std::vector<std::vector<int>> out(X.count(i - 1));
  if (i > X.dim()) return out;
  auto delta = coboundary_matrix(X, i - 1, Coefficients::F2);
  for (int r = 0; r < delta.rows(); ++r)
    for (auto k = delta.row_ptr()[r]; k < delta.row_ptr()[r + 1]; ++k) out[delta.col_index()[k]].push_back(r);
  return out;
}

// Walks all 2^N cochains in Gray-code order, tracking ||delta f||.
template <class Visit>
void gray_walk(int N, std::size_t M, const std::vector<std::vector<int>>& cof, Visit&& visit) {
  std::vector<std::uint64_t> delta((M + 63) / 64, 0);
  std::int64_t weight = 0;
  std::uint32_t f = 0;
  visit(f, weight);
  const std::uint64_t total = std::uint64_t{1} << N;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int j = std::countr_zero(step);
    f ^= 1u << j;
    for (int r : cof[j]) {
      auto& w = delta[r >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (r & 63);
      weight += (w & bit) ? -1 : 1;
      w ^= bit;
    }
    visit(f, weight);
  }
}

void check_cochain_caps(const SimplicialComplex& X, int i) {
  if (i < 1 || i - 1 > X.dim()) throw InvalidInput("dimension i must satisfy 1 <= i <= dim X + 1 (X^(i-1) nonempty)");
  if (X.count(i - 1) > kMaxCochain || X.count(i - 2) > kMaxCochain)
    throw CapExceeded("cochain enumeration limited to 22 faces in dimensions i-1 and i-2");
}

// Minimal Hamming weight (and lightest member) of every coset of `basis`,
// indexed by canonical representative.
void coset_minima(int N, const XorBasis& basis, std::vector<std::uint8_t>& minw, std::vector<std::uint32_t>& arg) {
  const std::size_t total = std::size_t{1} << N;
  minw.assign(total, 255);
  arg.assign(total, 0);
  std::vector<std::uint32_t> rep_unit(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) rep_unit[j] = basis.reduce(1u << j).first;
  std::uint32_t f = 0, rep = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    if (step) {
      const int j = std::countr_zero(step);
      f ^= 1u << j;
      rep ^= rep_unit[j];
    }
    const auto w = static_cast<std::uint8_t>(std::popcount(f));
    if (w < minw[rep] || (w == minw[rep] && f < arg[rep])) {
      minw[rep] = w;
      arg[rep] = f;
    }
  }
}

}  // namespace

bool Ratio::operator<(const Ratio& o) const {
  return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}
bool Ratio::operator==(const Ratio& o) const {
  return static_cast<__int128>(num) * o.den == static_cast<__int128>(o.num) * den;
}

GraphCheeger cheeger_graph(const Graph& g) {
  const int n = g.n();
  if (n < 2) throw InvalidInput("Cheeger constant needs at least 2 vertices");
  if (n > kMaxGraphCheeger) throw CapExceeded("graph Cheeger enumeration limited to 24 vertices");
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) nbr[v] |= 1u << u;
  bool have_h = false, have_hbar = false;
  Ratio h, hbar;
  std::uint32_t h_mask = 0, hbar_mask = 0;
  std::int64_t h_cut = 0, hbar_cut = 0;
  std::uint32_t a = 0;
  std::int64_t cut = 0;
  int size = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int v = std::countr_zero(step);
    const std::uint32_t bit = 1u << v;
    if (a & bit) {
      a ^= bit;
      --size;
      cut -= g.degree(v) - 2 * std::popcount(nbr[v] & a);
    } else {
      cut += g.degree(v) - 2 * std::popcount(nbr[v] & a);
      a ^= bit;
      ++size;
    }
    if (size == n) continue;
    const Ratio rh = make_ratio(static_cast<std::int64_t>(n) * cut, static_cast<std::int64_t>(size) * (n - size));
    if (!have_h || rh < h || (rh == h && a < h_mask)) {
      have_h = true;
      h = rh;
      h_mask = a;
      h_cut = cut;
    }
    if (2 * size <= n) {
      const Ratio rb = make_ratio(cut, size);
      if (!have_hbar || rb < hbar || (rb == hbar && a < hbar_mask)) {
        have_hbar = true;
        hbar = rb;
        hbar_mask = a;
        hbar_cut = cut;
      }
    }
  }
  auto witness = [n](std::uint32_t m, std::int64_t c, Ratio r) {
    PartitionWitness w;
    w.parts.resize(2);
    for (int v = 0; v < n; ++v) w.parts[(m >> v & 1u) ? 0 : 1].push_back(v);
    w.count = c;
    w.ratio = r;
    return w;
  };
  return {h, hbar, witness(h_mask, h_cut, h), witness(hbar_mask, hbar_cut, hbar)};
}

PartitionWitness cheeger_highdim(const SimplicialComplex& X) {
  const int d = X.dim();
  const int n = X.vertex_count();
  if (d < 1) throw InvalidInput("high-dimensional Cheeger constant needs dim >= 1");
  if (n < d + 1) throw InvalidInput("fewer vertices than parts");
  if (n > kMaxPartition) throw CapExceeded("partition enumeration limited to 14 vertices");
  const int parts = d + 1;
  const auto& top = X.flat(d);
  const std::size_t nf = X.count(d);
  std::vector<int> label(static_cast<std::size_t>(n), 0), sizes(static_cast<std::size_t>(parts), 0);
  bool have = false;
  Ratio best;
  std::int64_t best_count = 0;
  std::vector<int> best_label;
  auto evaluate = [&] {
    std::int64_t count = 0;
    for (std::size_t f = 0; f < nf; ++f) {
      std::uint32_t seen = 0;
      for (int j = 0; j <= d; ++j) seen |= 1u << label[top[f * parts + j]];
      count += std::popcount(seen) == parts;
    }
    std::int64_t prod = 1;
    for (int s : sizes) prod *= s;
    const Ratio r = make_ratio(static_cast<std::int64_t>(n) * count, prod);
    if (!have || r < best) {
      have = true;
      best = r;
      best_count = count;
      best_label = label;
    }
  };
  // Restricted growth strings with exactly `parts` blocks.
  auto rec = [&](auto&& self, int v, int used) -> void {
    if (n - v < parts - used) return;
    if (v == n) {
      evaluate();
      return;
    }
    for (int b = 0; b <= std::min(used, parts - 1); ++b) {
      label[v] = b;
      ++sizes[b];
      self(self, v + 1, std::max(used, b + 1));
      --sizes[b];
    }
  };
  rec(rec, 0, 0);
  PartitionWitness w;
  w.parts.resize(static_cast<std::size_t>(parts));
  for (int v = 0; v < n; ++v) w.parts[best_label[v]].push_back(v);
  w.count = best_count;
  w.ratio = best;
  return w;
}

std::int64_t transversal_count(const SimplicialComplex& X, const std::vector<std::vector<int>>& sets) {
  const int d = X.dim();
  if (d < 0) return 0;
  if (static_cast<int>(sets.size()) != d + 1) throw InvalidInput("need exactly dim X + 1 sets");
  std::vector<int> label(static_cast<std::size_t>(X.vertex_count()), -1);
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int v : sets[s]) {
      if (v < 0 || v >= X.vertex_count()) throw InvalidInput("vertex out of range");
      if (label[v] >= 0) throw InvalidInput("sets are not disjoint");
      label[v] = static_cast<int>(s);
    }
  const auto& top = X.flat(d);
  std::int64_t count = 0;
  for (std::size_t f = 0; f < X.count(d); ++f) {
    std::uint64_t seen = 0;
    bool ok = true;
    for (int j = 0; j <= d && ok; ++j) {
      const int l = label[top[f * (d + 1) + j]];
      if (l < 0 || (seen >> l & 1u)) ok = false;
      else seen |= std::uint64_t{1} << l;
    }
    count += ok;
  }
  return count;
}

double discrepancy(const SimplicialComplex& X, const std::vector<std::vector<int>>& sets) {
  const int d = X.dim();
  const std::int64_t f = transversal_count(X, sets);
  double prod = 1;
  for (const auto& s : sets) prod *= static_cast<double>(s.size());
  double binom = 1;
  const int n = X.vertex_count();
  for (int j = 0; j <= d; ++j) binom = binom * (n - j) / (j + 1);
  return std::abs(static_cast<double>(f) - static_cast<double>(X.count(d)) * prod / binom);
}

CoboundaryExpansion coboundary_expansion(const SimplicialComplex& X, int i) {
  check_cochain_caps(X, i);
  const int N = static_cast<int>(X.count(i - 1));
  const std::size_t M = i <= X.dim() ? X.count(i) : 0;
  // B^{i-1} = image of delta_{i-2}; columns indexed by (i-2)-faces.
  XorBasis B;
  {
    auto dprev = coboundary_matrix(X, i - 2, Coefficients::F2);
    std::vector<std::uint32_t> col(static_cast<std::size_t>(dprev.cols()), 0);
    for (int r = 0; r < dprev.rows(); ++r)
      for (auto k = dprev.row_ptr()[r]; k < dprev.row_ptr()[r + 1]; ++k) col[dprev.col_index()[k]] |= 1u << r;
    for (std::size_t c = 0; c < col.size(); ++c) B.add(col[c], 1u << c);
  }
  if (static_cast<int>(B.vec.size()) == N) throw InvalidInput("every cochain is a coboundary; expansion undefined");
  std::vector<std::uint8_t> minw;
  std::vector<std::uint32_t> arg;
  coset_minima(N, B, minw, arg);
  std::vector<std::uint32_t> rep_unit(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) rep_unit[j] = B.reduce(1u << j).first;
  const auto cof = cofaces(X, i);
  bool have = false;
  Ratio best;
  std::uint32_t best_f = 0;
  std::int64_t best_delta = 0;
  std::uint32_t rep = 0, prev = 0;
  gray_walk(N, M, cof, [&](std::uint32_t f, std::int64_t w) {
    if (f != prev) rep ^= rep_unit[std::countr_zero(f ^ prev)];
    prev = f;
    if (rep == 0) return;
    const Ratio r = make_ratio(w, minw[rep]);
    if (!have || r < best || (r == best && f < best_f)) {
      have = true;
      best = r;
      best_f = f;
      best_delta = w;
    }
  });
  CoboundaryExpansion out;
  out.E = best;
  out.E_normalized = M ? best.value() * N / static_cast<double>(M) : 0.0;
  out.cohomology_vanishes = best.num > 0;
  const std::uint32_t rep_f = B.reduce(best_f).first;
  const std::uint32_t g = arg[rep_f];
  const auto [zero, h] = B.reduce(best_f ^ g);
  if (zero != 0) throw VerificationFailure("coset shift did not reduce to zero");
  out.witness.f = support(best_f);
  out.witness.shift = support(h);
  out.witness.coset_norm = minw[rep_f];
  out.witness.delta_norm = best_delta;
  return out;
}

Filling filling(const SimplicialComplex& X, int i) {
  check_cochain_caps(X, i);
  const int N = static_cast<int>(X.count(i - 1));
  const std::size_t M = i <= X.dim() ? X.count(i) : 0;
  // Z^{i-1} = ker delta_{i-1}.
  XorBasis Z;
  if (M == 0) {
    for (int j = 0; j < N; ++j) Z.add(1u << j, 0);
  } else {
    auto bm = BitMatrix::from_sparse(coboundary_matrix(X, i - 1, Coefficients::F2));
    auto piv = bm.rref();
    std::vector<char> is_pivot(static_cast<std::size_t>(N), 0);
    for (int p : piv) is_pivot[p] = 1;
    for (int c = 0; c < N; ++c) {
      if (is_pivot[c]) continue;
      std::uint32_t v = 1u << c;
      for (std::size_t r = 0; r < piv.size(); ++r)
        if (bm.get(static_cast<int>(r), c)) v |= 1u << piv[r];
      Z.add(v, 0);
    }
  }
  if (static_cast<int>(Z.vec.size()) == N) throw InvalidInput("every cochain is a cocycle; filling undefined");
  std::vector<std::uint8_t> minw;
  std::vector<std::uint32_t> arg;
  coset_minima(N, Z, minw, arg);
  std::vector<std::uint32_t> rep_unit(static_cast<std::size_t>(N));
  for (int j = 0; j < N; ++j) rep_unit[j] = Z.reduce(1u << j).first;
  const auto cof = cofaces(X, i);
  bool have = false;
  Ratio best;
  std::uint32_t best_f = 0, rep = 0, prev = 0;
  std::int64_t best_delta = 0;
  gray_walk(N, M, cof, [&](std::uint32_t f, std::int64_t w) {
    if (f != prev) rep ^= rep_unit[std::countr_zero(f ^ prev)];
    prev = f;
    if (rep == 0) return;
    const Ratio r = make_ratio(minw[rep], w);
    if (!have || best < r || (r == best && f < best_f)) {
      have = true;
      best = r;
      best_f = f;
      best_delta = w;
    }
  });
  Filling out;
  out.nu = best;
  out.witness.f = support(best_f);
  out.witness.coset_norm = minw[Z.reduce(best_f).first];
  out.witness.delta_norm = best_delta;
  return out;
}

CheegerReport validate_cheeger_inequalities(const SimplicialComplex& X, double tol) {
  const int d = X.dim();
  if (d < 1) throw InvalidInput("Cheeger inequalities need dim >= 1");
  if (d >= 2 && !X.has_complete_skeleton(d - 1)) throw InvalidInput("complex lacks a complete (d-1)-skeleton");
  CheegerReport r;
  r.d = d;
  r.n = X.vertex_count();
  r.tol = tol;
  auto deg = X.up_degrees(d - 1);
  r.k = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  r.h = d == 1 ? cheeger_graph(X.skeleton()).h.value() : cheeger_highdim(X).ratio.value();
  r.lambda = spectral_gap(X, d - 1);
  const double shrink = 1.0 - static_cast<double>(d - 1) / r.n;
  r.lower = (r.k ? d * shrink * shrink * r.h * r.h / (8.0 * r.k) : 0.0) - (d - 1) * r.k;
  r.upper = r.h;
  auto le = [tol](double a, double b) { return a <= b + tol * std::max({1.0, std::abs(a), std::abs(b)}); };
  r.pass = le(r.lower, r.lambda) && le(r.lambda, r.upper);
  if (d == 1) {
    auto g = X.skeleton();
    if (auto k = g.regular_degree()) {
      auto eig = sym_eigs(g.adjacency());
      r.mu1 = mu_values_from_spectrum(eig.values, *k, false).mu1;
      const double gap = *k - *r.mu1;
      r.pass = r.pass && le(r.h * r.h / (8.0 * *k), gap) && le(gap, r.h) &&
               std::abs(gap - r.lambda) <= 1e-8 * std::max(1.0, static_cast<double>(*k));
    }
  }
  return r;
}

MixingReport validate_mixing(const SimplicialComplex& X, int trials, std::uint64_t seed, double tol) {
  const int d = X.dim();
  if (d < 1) throw InvalidInput("mixing needs dim >= 1");
  if (trials < 0) throw InvalidInput("trials must be nonnegative");
  if (d >= 2 && !X.has_complete_skeleton(d - 1)) throw InvalidInput("complex lacks a complete (d-1)-skeleton");
  MixingReport rep;
  rep.d = d;
  rep.seed = seed;
  rep.tol = tol;
  const int n = X.vertex_count();
  rep.k = static_cast<double>(d + 1) * static_cast<double>(X.count(d)) / static_cast<double>(X.count(d - 1));
  for (double g : restricted_laplacian_spectrum(X, d - 1)) rep.mu0 = std::max(rep.mu0, std::abs(rep.k - g));
  std::mt19937_64 rng(seed);
  auto le = [tol](double a, double b) { return a <= b + tol * std::max(1.0, b); };
  auto random_sets = [&](int parts) {
    std::uniform_int_distribution<int> pick(0, parts);  // value `parts` = unused
    std::vector<std::vector<int>> sets(static_cast<std::size_t>(parts));
    for (int v = 0; v < n; ++v) {
      const int l = pick(rng);
      if (l < parts) sets[l].push_back(v);
    }
    return sets;
  };
  rep.pass = true;
  for (int t = 0; t < trials; ++t) {
    auto sets = random_sets(d + 1);
    MixingTrial tr;
    double prod = 1;
    for (const auto& s : sets) {
      tr.sizes.push_back(static_cast<int>(s.size()));
      prod *= static_cast<double>(s.size());
    }
    tr.count = transversal_count(X, sets);
    tr.deviation = std::abs(static_cast<double>(tr.count) - rep.k * prod / n);
    tr.bound = rep.mu0 * std::pow(prod, static_cast<double>(d) / (d + 1));
    tr.pass = le(tr.deviation, tr.bound);
    rep.pass = rep.pass && tr.pass;
    rep.trials.push_back(std::move(tr));
  }
  if (d == 1) {
    auto g = X.skeleton();
    auto k = g.regular_degree();
    if (k && g.is_connected() && n > 1) {
      rep.graph_mu0 = mu_values(g).mu0;
      for (int t = 0; t < trials; ++t) {
        auto sets = random_sets(2);
        MixingTrial tr;
        tr.sizes = {static_cast<int>(sets[0].size()), static_cast<int>(sets[1].size())};
        const double prod = static_cast<double>(tr.sizes[0]) * tr.sizes[1];
        tr.count = transversal_count(X, sets);
        tr.deviation = std::abs(static_cast<double>(tr.count) - *k * prod / n);
        tr.bound = *rep.graph_mu0 * std::sqrt(prod);
        tr.pass = le(tr.deviation, tr.bound);
        rep.pass = rep.pass && tr.pass;
        rep.graph_trials.push_back(std::move(tr));
      }
    }
  }
  return rep;
}

namespace {

double orient(const Point2& a, const Point2& b, const Point2& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

bool in_closed_triangle(const Point2& a, const Point2& b, const Point2& c, const Point2& p) {
  const double area = orient(a, b, c);
  const double eps = 1e-12 * std::abs(area);
  const double s0 = orient(a, b, p), s1 = orient(b, c, p), s2 = orient(c, a, p);
  if (area > 0) return s0 >= -eps && s1 >= -eps && s2 >= -eps;
  return s0 <= eps && s1 <= eps && s2 <= eps;
}

}  // namespace

OverlapDepth overlap_depth(const SimplicialComplex& X, const std::vector<Point2>& embedding, std::uint64_t seed) {
  if (X.dim() < 2 || X.count(2) == 0) throw InvalidInput("overlap depth needs 2-faces");
  const int n = X.vertex_count();
  if (static_cast<int>(embedding.size()) != n) throw InvalidInput("embedding size differs from vertex count");
  std::vector<Point2> pts = embedding;
  {
    auto sorted = pts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InvalidInput("embedding is not injective");
  }
  const auto& tri = X.flat(2);
  const std::size_t nt = X.count(2);
  // Edges of the triangles, deduplicated.
  std::vector<std::pair<int, int>> segs;
  for (std::size_t t = 0; t < nt; ++t) {
    const int v0 = tri[3 * t], v1 = tri[3 * t + 1], v2 = tri[3 * t + 2];
    segs.insert(segs.end(), {{v0, v1}, {v0, v2}, {v1, v2}});
  }
  std::sort(segs.begin(), segs.end());
  segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
  {
    // Rough cost: collinearity scan, segment pairs, and depth counts with
    // about one crossing per eight segment pairs.
    const double ns = static_cast<double>(segs.size()), dn = n;
    const double work = dn * dn * dn / 6 + ns * ns / 2 + (dn + nt + ns * ns / 16) * static_cast<double>(nt);
    if (work > kMaxOverlapWork) throw CapExceeded("overlap depth search too large for this complex");
  }
  double lo0 = pts[0][0], hi0 = lo0, lo1 = pts[0][1], hi1 = lo1;
  for (const auto& p : pts) {
    lo0 = std::min(lo0, p[0]);
    hi0 = std::max(hi0, p[0]);
    lo1 = std::min(lo1, p[1]);
    hi1 = std::max(hi1, p[1]);
  }
  const double scale = std::max({hi0 - lo0, hi1 - lo1, 1e-300});
  OverlapDepth out;
  bool degenerate = false;
  for (int a = 0; a < n && !degenerate; ++a)
    for (int b = a + 1; b < n && !degenerate; ++b)
      for (int c = b + 1; c < n && !degenerate; ++c)
        degenerate = std::abs(orient(pts[a], pts[b], pts[c])) <= 1e-12 * scale * scale;
  if (degenerate) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& p : pts) {
      p[0] += 1e-9 * scale * u(rng);
      p[1] += 1e-9 * scale * u(rng);
    }
    out.jittered = true;
  }
  std::vector<Point2> cand = pts;
  for (std::size_t t = 0; t < nt; ++t) {
    const auto &a = pts[tri[3 * t]], &b = pts[tri[3 * t + 1]], &c = pts[tri[3 * t + 2]];
    cand.push_back({(a[0] + b[0] + c[0]) / 3, (a[1] + b[1] + c[1]) / 3});
  }
  for (std::size_t s = 0; s < segs.size(); ++s)
    for (std::size_t r = s + 1; r < segs.size(); ++r) {
      auto [a, b] = segs[s];
      auto [c, d] = segs[r];
      if (a == c || a == d || b == c || b == d) continue;
      const Point2 &p = pts[a], &q = pts[b], &u = pts[c], &v = pts[d];
      const double o1 = orient(p, q, u), o2 = orient(p, q, v), o3 = orient(u, v, p), o4 = orient(u, v, q);
      if ((o1 > 0) == (o2 > 0) || (o3 > 0) == (o4 > 0)) continue;
      const double t = o3 / (o3 - o4);
      cand.push_back({p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])});
    }
  out.triangles = static_cast<std::int64_t>(nt);
  out.depth = -1;
  for (const auto& z : cand) {
    std::int64_t cnt = 0;
    for (std::size_t t = 0; t < nt; ++t)
      cnt += in_closed_triangle(pts[tri[3 * t]], pts[tri[3 * t + 1]], pts[tri[3 * t + 2]], z);
    if (cnt > out.depth) {
      out.depth = cnt;
      out.witness = z;
    }
  }
  out.fraction = static_cast<double>(out.depth) / static_cast<double>(nt);
  return out;
}

OverlapEstimate overlap_estimate(const SimplicialComplex& X, int trials, std::uint64_t seed) {
  if (trials < 1) throw InvalidInput("overlap estimate needs trials >= 1");
  OverlapEstimate est;
  est.trials = trials;
  est.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    std::vector<Point2> pts(static_cast<std::size_t>(X.vertex_count()));
    for (auto& p : pts) p = {u(rng), u(rng)};
    const double f = overlap_depth(X, pts, seed + static_cast<std::uint64_t>(t)).fraction;
    est.fractions.push_back(f);
    if (t == 0 || f < est.upper_bound) {
      est.upper_bound = f;
      est.worst_trial = t;
    }
  }
  return est;
}

}  // namespace rlab
