#include "rlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rlab/errors.hpp"

namespace rlab {

namespace {

bool cplx_less(const cplx& a, const cplx& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

double dense_norm_bound(const std::vector<double>& values) {
  double n = 0;
  for (double v : values) n = std::max(n, std::abs(v));
  return n;
}

void check_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw InvalidInput("matrix is not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw InvalidInput("matrix is not symmetric");
}

}  // namespace

Eigen::MatrixXd to_dense(const SparseMatrix& m) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (auto k = m.row_ptr()[r]; k < m.row_ptr()[r + 1]; ++k)
      d(r, m.col_index()[k]) = static_cast<double>(m.values()[k]);
  return d;
}

SymEigResult sym_eigs(const Eigen::MatrixXd& m, bool keep_vectors) {
  check_symmetric(m);
  SymEigResult out;
  if (m.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw VerificationFailure("symmetric eigensolver did not converge");
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + m.rows());
  out.norm = dense_norm_bound(out.values);
  Eigen::MatrixXd r = m * es.eigenvectors() - es.eigenvectors() * es.eigenvalues().asDiagonal();
  out.max_residual = r.colwise().norm().maxCoeff();
  if (out.max_residual > 1e-9 * std::max(1.0, out.norm))
    throw VerificationFailure("eigenpair residual exceeds 1e-9 * ||M||");
  if (keep_vectors) out.vectors = es.eigenvectors();
  return out;
}

SymEigResult sym_eigs(const SparseMatrix& m, bool keep_vectors) {
  if (!(m == m.transpose())) throw InvalidInput("matrix is not symmetric");
  SymEigResult out;
  const int n = m.rows();
  if (n == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_dense(m), Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw VerificationFailure("symmetric eigensolver did not converge");
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
  out.norm = dense_norm_bound(out.values);
  std::vector<double> av(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double* v = es.eigenvectors().col(j).data();
    m.apply(v, av.data());
    double s = 0;
    for (int i = 0; i < n; ++i) {
      const double e = av[i] - out.values[j] * v[i];
      s += e * e;
    }
    out.max_residual = std::max(out.max_residual, std::sqrt(s));
  }
  if (out.max_residual > 1e-9 * std::max(1.0, out.norm))
    throw VerificationFailure("eigenpair residual exceeds 1e-9 * ||M||");
  if (keep_vectors) out.vectors = es.eigenvectors();
  return out;
}

std::string to_string(EigenTag t) {
  switch (t) {
    case EigenTag::Trivial: return "trivial";
    case EigenTag::Tempered: return "tempered";
    case EigenTag::Violating: return "violating";
  }
  return "?";
}

MuValues mu_values_from_spectrum(const std::vector<double>& v, int k, bool bipartite) {
  if (v.empty()) throw InvalidInput("empty spectrum");
  // v ascending; drop one copy of k from the top and, for bipartite graphs,
  // one copy of -k from the bottom.
  const std::size_t top = v.size() - 1;
  (void)k;
  MuValues mv{0, 0, -std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == top) continue;
    mv.mu1 = std::max(mv.mu1, v[i]);
    mv.mu0 = std::max(mv.mu0, std::abs(v[i]));
    if (bipartite && i == 0) continue;
    mv.mu = std::max(mv.mu, std::abs(v[i]));
  }
  if (v.size() == 1) mv.mu1 = 0;
  return mv;
}

MuValues mu_values(const Graph& g) {
  auto k = g.regular_degree();
  if (!k) throw InvalidInput("mu values need a regular graph");
  if (!g.is_connected()) throw InvalidInput("mu values need a connected graph");
  auto eig = sym_eigs(g.adjacency());
  return mu_values_from_spectrum(eig.values, *k, g.bipartition().has_value());
}

GraphVerdict is_ramanujan_graph(const Graph& g, double tol) {
  auto k = g.regular_degree();
  if (!k) throw InvalidInput("Ramanujan verdict needs a regular graph");
  if (*k < 3) throw InvalidInput("Ramanujan verdict needs degree k >= 3");
  if (!g.is_connected()) throw InvalidInput("Ramanujan verdict needs a connected graph");
  GraphVerdict out;
  out.k = *k;
  out.bound = 2.0 * std::sqrt(static_cast<double>(*k - 1));
  out.bipartite = g.bipartition().has_value();
  auto eig = sym_eigs(g.adjacency());
  auto mv = mu_values_from_spectrum(eig.values, *k, out.bipartite);
  out.mu = mv.mu;
  out.mu0 = mv.mu0;
  out.mu1 = mv.mu1;
  out.spectrum.residual_bound = eig.max_residual;
  out.ramanujan = true;
  const double triv_tol = 1e-9 * std::max(1.0, eig.norm);
  for (double lam : eig.values) {
    out.spectrum.eigenvalues.emplace_back(lam, 0.0);
    EigenTag tag;
    if (std::abs(lam - *k) <= triv_tol || (out.bipartite && std::abs(lam + *k) <= triv_tol))
      tag = EigenTag::Trivial;
    else if (std::abs(lam) <= out.bound + tol)
      tag = EigenTag::Tempered;
    else
      tag = EigenTag::Violating;
    if (tag == EigenTag::Violating && out.ramanujan) {
      out.ramanujan = false;
      out.offending = lam;
    }
    out.spectrum.tags.push_back(tag);
  }
  return out;
}

std::vector<double> restricted_laplacian_spectrum(const SimplicialComplex& X, int i) {
  if (i < 0 || i > X.dim()) throw InvalidInput("spectral gap dimension out of range");
  const int n = static_cast<int>(X.count(i));
  if (n > 5000) throw CapExceeded("restricted laplacian limited to 5000 faces");
  Eigen::MatrixXd b = to_dense(boundary_matrix(X, i));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> gram(b.transpose() * b);
  const double cut = 1e-9 * std::max(1.0, gram.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<int> kernel;
  for (int j = 0; j < n; ++j)
    if (gram.eigenvalues()(j) <= cut) kernel.push_back(j);
  if (kernel.empty()) return {};
  Eigen::MatrixXd N(n, static_cast<Eigen::Index>(kernel.size()));
  for (std::size_t j = 0; j < kernel.size(); ++j) N.col(static_cast<Eigen::Index>(j)) = gram.eigenvectors().col(kernel[j]);
  Eigen::MatrixXd up = to_dense(laplacian(X, i, LaplacianPart::Up));
  Eigen::MatrixXd r = N.transpose() * up * N;
  r = 0.5 * (r + r.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r, Eigen::EigenvaluesOnly);
  return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

double spectral_gap(const SimplicialComplex& X, int i) {
  auto s = restricted_laplacian_spectrum(X, i);
  if (s.empty()) throw InvalidInput("Z_i is zero, the spectral gap is undefined");
  return s.front();
}

u128 gaussian_binomial(int d, int k, std::uint64_t q) {
  if (d < 0 || k < 0 || k > d) throw InvalidInput("gaussian binomial needs 0 <= k <= d");
  if (q < 2) throw InvalidInput("gaussian binomial needs q >= 2");
  // Multiply all numerator factors then divide, keeping exactness via the
  // running product being an integer at each step: prod_{j<i} / prod_{j<i}
  // is itself a Gaussian binomial.
  u128 r = 1;
  auto qpow = [&](int e) {
    u128 p = 1;
    for (int i = 0; i < e; ++i)
      if (__builtin_mul_overflow(p, static_cast<u128>(q), &p)) throw CapExceeded("gaussian binomial overflows 128 bits");
    return p;
  };
  for (int j = 0; j < k; ++j) {
    u128 num = qpow(d - j) - 1, den = qpow(j + 1) - 1;
    u128 t;
    if (__builtin_mul_overflow(r, num, &t)) throw CapExceeded("gaussian binomial overflows 128 bits");
    r = t / den;
  }
  return r;
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::vector<std::vector<cplx>> trivial_tuples(int d, std::uint64_t q) {
  if (d < 2) throw InvalidInput("trivial tuples need d >= 2");
  std::vector<std::vector<cplx>> out;
  for (int j = 0; j < d; ++j) {
    const cplx xi = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
    std::vector<cplx> t;
    for (int k = 1; k < d; ++k) {
      const double g = static_cast<double>(gaussian_binomial(d, k, q));
      t.push_back(g * std::pow(xi, k));
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Inside: return "inside";
    case Membership::Outside: return "outside";
    case Membership::Asymmetric: return "asymmetric";
  }
  return "?";
}

MembershipResult sigma_d_membership(const std::vector<cplx>& tuple, int d, std::uint64_t q, double tol) {
  if (d < 2) throw InvalidInput("sigma_d membership needs d >= 2");
  if (static_cast<int>(tuple.size()) != d - 1) throw InvalidInput("tuple length must be d-1");
  MembershipResult out;
  std::vector<cplx> sigma(static_cast<std::size_t>(d + 1));
  sigma[0] = sigma[d] = 1.0;
  for (int k = 1; k < d; ++k) sigma[k] = tuple[k - 1] / std::pow(static_cast<double>(q), k * (d - k) / 2.0);
  bool symmetric = true;
  for (int k = 1; k < d; ++k) {
    const cplx a = tuple[k - 1], b = std::conj(tuple[d - k - 1]);
    if (std::abs(a - b) > tol * std::max(1.0, std::abs(a))) symmetric = false;
  }
  // Companion matrix of z^d + c_1 z^{d-1} + ... + c_d, c_j = (-1)^j sigma_j.
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int j = 1; j <= d; ++j) comp(0, j - 1) = -((j % 2 == 0) ? sigma[j] : -sigma[j]);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  for (int i = 0; i < d; ++i) out.roots.push_back(es.eigenvalues()(i));
  std::sort(out.roots.begin(), out.roots.end(), cplx_less);
  // Cluster nearby roots (a root of multiplicity m is perturbed by about
  // eps^{1/m}) and judge each cluster by its centroid.
  const double radius = 1e-4;
  std::vector<int> cluster(static_cast<std::size_t>(d), -1);
  bool inside = true;
  for (int i = 0; i < d; ++i) {
    if (cluster[i] >= 0) continue;
    cluster[i] = i;
    std::vector<int> members{i};
    for (std::size_t m = 0; m < members.size(); ++m)
      for (int j = 0; j < d; ++j)
        if (cluster[j] < 0 && std::abs(out.roots[members[m]] - out.roots[j]) <= radius) {
          cluster[j] = i;
          members.push_back(j);
        }
    cplx c = 0;
    for (int m : members) c += out.roots[m];
    c /= static_cast<double>(members.size());
    if (std::abs(1.0 - std::abs(c)) > tol) inside = false;
  }
  if (!symmetric)
    out.status = Membership::Asymmetric;
  else
    out.status = inside ? Membership::Inside : Membership::Outside;
  return out;
}

JointSpectrum joint_spectrum(const std::vector<SparseMatrix>& ops, std::uint64_t seed, double tol) {
  if (ops.empty()) throw InvalidInput("joint spectrum needs at least one operator");
  const int m = static_cast<int>(ops.size());
  const int d = m + 1;
  const int n = ops[0].rows();
  for (const auto& a : ops)
    if (a.rows() != n || a.cols() != n) throw InvalidInput("operators must be square of equal size");
  if (n > 5000) throw CapExceeded("joint spectrum is limited to 5000 vertices");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!(ops[i] * ops[j] == ops[j] * ops[i])) throw VerificationFailure("operators do not commute");
  for (int k = 1; k < d; ++k)
    if (!(ops[k - 1].transpose() == ops[d - k - 1])) throw VerificationFailure("A_k transpose differs from A_{d-k}");
  std::int64_t deg = 0;
  for (const auto& a : ops)
    for (int r = 0; r < n; ++r) {
      std::int64_t s = 0;
      for (auto k = a.row_ptr()[r]; k < a.row_ptr()[r + 1]; ++k) s += std::abs(a.values()[k]);
      deg = std::max(deg, s);
    }
  JointSpectrum out;
  out.seed = seed;
  out.residual_tol = tol * std::max<double>(1.0, static_cast<double>(deg));
  std::vector<SparseMatrix> skew;
  bool all_symmetric = true;
  for (int k = 0; k < m; ++k) {
    skew.push_back(ops[k] - ops[k].transpose());
    all_symmetric = all_symmetric && skew.back().is_zero();
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  std::vector<double> re(static_cast<std::size_t>(n)), im(static_cast<std::size_t>(n)), are(re), aim(re);
  for (int attempt = 0; attempt < 6; ++attempt) {
    out.attempts = attempt + 1;
    std::vector<double> t(static_cast<std::size_t>(m)), s(static_cast<std::size_t>(m));
    for (auto& x : t) x = coef(rng);
    for (auto& x : s) x = coef(rng);
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < m; ++k) {
      Eigen::MatrixXd a = to_dense(ops[k]);
      S += t[k] * (a + a.transpose());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw VerificationFailure("eigensolver failed in joint spectrum");
    const auto& w = es.eigenvalues();
    const auto& V = es.eigenvectors();
    const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
    Eigen::MatrixXcd vecs(n, n);
    int a = 0;
    while (a < n) {
      int b = a + 1;
      while (b < n && w(b) - w(b - 1) <= 1e-7 * scale) ++b;
      const int c = b - a;
      if (c == 1 || all_symmetric) {
        vecs.middleCols(a, c) = V.middleCols(a, c).cast<cplx>();
      } else {
        Eigen::MatrixXd Vc = V.middleCols(a, c);
        Eigen::MatrixXd K = Eigen::MatrixXd::Zero(c, c);
        Eigen::MatrixXd tmp(n, c);
        for (int k = 0; k < m; ++k) {
          for (int j = 0; j < c; ++j) skew[k].apply(Vc.col(j).data(), tmp.col(j).data());
          K += s[k] * (Vc.transpose() * tmp);
        }
        Eigen::MatrixXcd H = cplx(0, 1) * K.cast<cplx>();
        H = 0.5 * (H + H.adjoint()).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(H);
        vecs.middleCols(a, c) = Vc.cast<cplx>() * hs.eigenvectors();
      }
      a = b;
    }
    out.tuples.assign(static_cast<std::size_t>(n), std::vector<cplx>(static_cast<std::size_t>(m)));
    out.max_residual = 0;
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        re[i] = vecs(i, j).real();
        im[i] = vecs(i, j).imag();
      }
      for (int k = 0; k < m; ++k) {
        ops[k].apply(re.data(), are.data());
        ops[k].apply(im.data(), aim.data());
        cplx lam = 0;
        for (int i = 0; i < n; ++i) lam += std::conj(vecs(i, j)) * cplx(are[i], aim[i]);
        double r2 = 0;
        for (int i = 0; i < n; ++i) r2 += std::norm(cplx(are[i], aim[i]) - lam * vecs(i, j));
        out.max_residual = std::max(out.max_residual, std::sqrt(r2));
        if (std::abs(lam.imag()) < 1e-13 * scale) lam.imag(0.0);
        out.tuples[j][k] = lam;
      }
    }
    if (out.max_residual <= out.residual_tol) {
      std::sort(out.tuples.begin(), out.tuples.end(), [](const auto& x, const auto& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), cplx_less);
      });
      return out;
    }
  }
  throw RetryExhausted("joint spectrum residual " + std::to_string(out.max_residual) + " above tolerance after retries");
}

std::string to_string(TupleClass c) {
  switch (c) {
    case TupleClass::Trivial: return "trivial";
    case TupleClass::Inside: return "inside";
    case TupleClass::Outside: return "outside";
    case TupleClass::Asymmetric: return "asymmetric";
  }
  return "?";
}

ComplexVerdict is_ramanujan_complex(const std::vector<std::vector<cplx>>& tuples, int d, std::uint64_t q, double tol) {
  ComplexVerdict out;
  const auto triv = trivial_tuples(d, q);
  std::vector<double> scale;
  for (int k = 1; k < d; ++k) scale.push_back(static_cast<double>(gaussian_binomial(d, k, q)));
  out.ramanujan = true;
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != d - 1) throw InvalidInput("tuple length must be d-1");
    TupleClass cls = TupleClass::Outside;
    for (const auto& tt : triv) {
      bool match = true;
      for (int k = 0; k < d - 1 && match; ++k) match = std::abs(t[k] - tt[k]) <= tol * scale[k];
      if (match) {
        cls = TupleClass::Trivial;
        break;
      }
    }
    if (cls != TupleClass::Trivial) {
      switch (sigma_d_membership(t, d, q, tol).status) {
        case Membership::Inside: cls = TupleClass::Inside; break;
        case Membership::Outside: cls = TupleClass::Outside; break;
        case Membership::Asymmetric: cls = TupleClass::Asymmetric; break;
      }
    }
    switch (cls) {
      case TupleClass::Trivial: ++out.trivial; break;
      case TupleClass::Inside: ++out.inside; break;
      case TupleClass::Outside: ++out.outside; break;
      case TupleClass::Asymmetric: ++out.asymmetric; break;
    }
    if (cls == TupleClass::Outside || cls == TupleClass::Asymmetric) out.ramanujan = false;
    out.classes.push_back(cls);
  }
  return out;
}

ExtremalResult lanczos_extremal(const SparseMatrix& a, const std::vector<std::vector<double>>& deflate,
                                std::uint64_t seed, int max_iter, double tol) {
  const int n = a.rows();
  if (n == 0) throw InvalidInput("empty matrix");
  std::vector<std::vector<double>> D;
  auto dot = [n](const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
  };
  auto axpy = [n](std::vector<double>& y, double c, const std::vector<double>& x) {
    for (int i = 0; i < n; ++i) y[i] += c * x[i];
  };
  for (auto v : deflate) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& u : D) axpy(v, -dot(u, v), u);
    const double nv = std::sqrt(dot(v, v));
    if (nv < 1e-12) continue;
    for (auto& x : v) x /= nv;
    D.push_back(std::move(v));
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<double> q(static_cast<std::size_t>(n));
  for (auto& x : q) x = gauss(rng);
  for (int pass = 0; pass < 2; ++pass)
    for (const auto& u : D) axpy(q, -dot(u, q), u);
  double nq = std::sqrt(dot(q, q));
  for (auto& x : q) x /= nq;
  std::vector<std::vector<double>> Q{q};
  std::vector<double> alpha, beta;
  std::vector<double> w(static_cast<std::size_t>(n));
  ExtremalResult out;
  const int limit = std::min(max_iter, n - static_cast<int>(D.size()));
  for (int j = 0; j < limit; ++j) {
    a.apply(Q[j].data(), w.data());
    const double al = dot(Q[j], w);
    alpha.push_back(al);
    axpy(w, -al, Q[j]);
    if (j > 0) axpy(w, -beta[j - 1], Q[j - 1]);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : D) axpy(w, -dot(u, w), u);
      for (const auto& u : Q) axpy(w, -dot(u, w), u);
    }
    const double b = std::sqrt(dot(w, w));
    const int m = j + 1;
    const bool last = (j + 1 == limit) || b < 1e-10;
    if (m % 10 == 0 || last) {
      Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        T(i, i) = alpha[i];
        if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
      out.min_ritz = es.eigenvalues()(0);
      out.max_ritz = es.eigenvalues()(m - 1);
      out.spectral_radius = std::max(std::abs(out.min_ritz), std::abs(out.max_ritz));
      out.residual = std::max(std::abs(b * es.eigenvectors()(m - 1, 0)), std::abs(b * es.eigenvectors()(m - 1, m - 1)));
      out.iterations = m;
      out.converged = out.residual <= tol * std::max(1.0, out.spectral_radius) || b < 1e-10;
      if (out.converged || last) return out;
    }
    beta.push_back(b);
    for (auto& x : w) x /= b;
    Q.push_back(w);
  }
  return out;
}

std::optional<int> injectivity_radius(const Graph& g) {
  auto girth = g.girth();
  if (!girth) return std::nullopt;
  return (*girth - 1) / 2;
}

}  // namespace rlab
