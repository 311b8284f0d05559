#include "rlab/cli.hpp"

#include <cmath>
#include <iostream>

#include "CLI11.hpp"
#include "rlab/building.hpp"
#include "rlab/errors.hpp"
#include "rlab/expansion.hpp"
#include "rlab/lps.hpp"
#include "rlab/parallel.hpp"
#include "rlab/spectra.hpp"

namespace rlab {

namespace {

constexpr double kEigTol = 1e-9;

json ratio_json(const Ratio& r) {
  return json{{"num", exact(r.num)}, {"den", exact(r.den)}, {"approx", measured(r.value(), 1e-12)}};
}

json u128_json(u128 v) { return exact(u128_to_string(v)); }

json exact_u(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(INT64_MAX)) return exact(std::to_string(v));
  return exact(static_cast<std::int64_t>(v));
}

SimplicialComplex skeleton_of(const SimplicialComplex& X, int i) {
  if (i >= X.dim()) return X;
  std::vector<std::vector<int>> levels;
  for (int k = 0; k <= i; ++k) levels.push_back(X.flat(k));
  return SimplicialComplex::from_sorted_levels(X.vertex_count(), std::move(levels));
}

json face_counts(const SimplicialComplex& X) {
  json c = json::array();
  for (int k = 0; k <= X.dim(); ++k) c.push_back(exact_u(X.count(k)));
  return c;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

double ramanujan_bound(int d, std::uint64_t q) {
  double bound = 0;
  for (int k = 1; k < d; ++k) {
    double binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (d - i) / (i + 1);
    bound += binom * std::pow(static_cast<double>(q), k * (d - k) / 2.0);
  }
  return bound;
}

}  // namespace

ReportDoc lps_report(std::uint32_t p, std::uint32_t q, GraphDoc* doc) {
  ReportDoc r;
  r.operation = "lps";
  r.parameters = {{"p", exact(p)}, {"q", exact(q)}};
  auto x = lps_graph(p, q);
  const Graph& g = x.graph;
  const std::uint64_t expect = x.pgl ? pgl_order(2, q) : psl_order(2, q);
  r.results = {{"vertices", exact(g.n())},
               {"edges", exact_u(g.edge_count())},
               {"degree", exact(g.regular_degree().value_or(-1))},
               {"group", x.pgl ? "PGL" : "PSL"},
               {"bipartite", x.bipartite},
               {"connected", g.is_connected()},
               {"summary", std::to_string(g.n()) + " vertices, " + std::to_string(p + 1) + "-regular, " +
                               (x.bipartite ? "bipartite" : "non-bipartite")}};
  r.check("vertex count is |PSL_2| or |PGL_2| as predicted", static_cast<std::uint64_t>(g.n()) == expect);
  r.check("regular of degree p+1", g.regular_degree() == static_cast<int>(p + 1));
  r.check("connected", g.is_connected());
  if (doc) {
    *doc = graph_doc(g, "lps");
    doc->p = p;
    doc->q = q;
  }
  return r;
}

ReportDoc spectrum_report(const GraphDoc& gd, bool ramanujan) {
  ReportDoc r;
  r.operation = "spectrum";
  r.parameters = {{"ramanujan", ramanujan}, {"construction", gd.construction}};
  const Graph g = to_graph(gd);
  auto eig = sym_eigs(g.adjacency());
  const double tol = kEigTol * std::max(1.0, eig.norm);
  r.tolerances = {{"eigenvalue", tol}};
  r.results = {{"vertices", exact(g.n())},
               {"lambda_min", measured(eig.values.front(), tol)},
               {"lambda_max", measured(eig.values.back(), tol)},
               {"max_residual", measured(eig.max_residual, tol)}};
  r.check("eigen residuals within tolerance", eig.max_residual <= tol);
  const auto k = g.regular_degree();
  if (k) r.results["degree"] = exact(*k);
  if (k && g.is_connected() && g.n() > 1) {
    auto mu = mu_values_from_spectrum(eig.values, *k, g.bipartition().has_value());
    r.results["mu"] = measured(mu.mu, tol);
    r.results["mu0"] = measured(mu.mu0, tol);
    r.results["mu1"] = measured(mu.mu1, tol);
  }
  if (ramanujan) {
    auto v = is_ramanujan_graph(g);
    r.tolerances["ramanujan"] = 1e-9;
    r.results["ramanujan"] = yes_no(v.ramanujan);
    r.results["bound"] = measured(v.bound, 1e-12);
    r.results["max_nontrivial_abs"] = measured(v.mu, tol);
    r.results["bipartite"] = v.bipartite;
    if (v.offending) r.results["offending"] = measured(*v.offending, tol);
    r.results["summary"] = "ramanujan: " + yes_no(v.ramanujan);
    r.check("ramanujan", v.ramanujan);
  }
  return r;
}

ReportDoc ball_report(int d, std::uint64_t q, int r_, ComplexDoc* doc) {
  ReportDoc r;
  r.operation = "ball";
  r.parameters = {{"d", exact(d)}, {"q", exact_u(q)}, {"r", exact(r_)}};
  auto ball = building_ball(d, q, r_);
  json spheres = json::array();
  for (auto s : ball.sphere_sizes) spheres.push_back(exact_u(s));
  auto link = link_counts(ball.complex, 0);
  r.results = {{"vertices", exact_u(ball.classes.size())},
               {"sphere_sizes", spheres},
               {"face_counts", face_counts(ball.complex)},
               {"center_link_vertices", exact_u(link.vertices)},
               {"center_link_edges", exact_u(link.edges)},
               {"summary", std::to_string(ball.classes.size()) + " vertices, link " + std::to_string(link.vertices) +
                               "/" + std::to_string(link.edges)}};
  if (r_ >= 1) {
    // Link of x0: proper nonzero subspaces of F_q^d, edges = nested pairs.
    u128 lv = 0, le = 0;
    for (int w = 1; w < d; ++w) {
      lv += gaussian_binomial(d, w, q);
      for (int w2 = w + 1; w2 < d; ++w2) le += gaussian_binomial(d, w2, q) * gaussian_binomial(w2, w, q);
    }
    r.check("center link vertices = proper subspaces", link.vertices == static_cast<std::size_t>(lv));
    if (d >= 3) r.check("center link edges = nested subspace pairs", link.edges == static_cast<std::size_t>(le));
    r.check("first sphere = proper subspaces", ball.sphere_sizes[1] == static_cast<std::size_t>(lv));
  }
  if (d == 2) {
    std::size_t expect = 1, layer = q + 1;
    for (int j = 1; j <= r_; ++j, layer *= q) expect += layer;
    r.check("tree ball size 1+(q+1)sum q^j", ball.classes.size() == expect);
  }
  if (doc) {
    *doc = complex_doc(ball.complex, json{{"construction", "building-ball"}, {"d", d}, {"q", q}, {"r", r_}});
    doc->vertex_colors = ball.tau;
    std::vector<std::array<int, 3>> ec;
    for (const auto& [e, c] : ball.edge_color) ec.push_back({e.first, e.second, c});
    doc->edge_colors = ec;
  }
  return r;
}

ComplexDoc cs_complex_doc(const CsComplex& cx, std::uint64_t seed) {
  json prov = {{"construction", "cartwright-steger"},
               {"d", cx.d},
               {"q", cx.q},
               {"ideal", cx.ideal.coeffs()},
               {"e", cx.e},
               {"t", cx.t},
               {"seed", seed},
               {"theorem_guaranteed", cx.theorem_guaranteed},
               {"group", cx.group_name},
               {"group_order", cx.group->size()},
               {"pgl_order", cx.pgl_order},
               {"psl_order", cx.psl_order}};
  ComplexDoc doc = complex_doc(cx.complex, prov);
  doc.vertex_colors = cx.vertex_color;
  std::vector<std::array<int, 3>> ec;
  for (std::size_t k = 0; k < cx.hecke.size(); ++k) {
    const auto& A = cx.hecke[k];
    std::vector<std::array<std::int64_t, 3>> trip;
    for (int row = 0; row < A.rows(); ++row)
      for (auto idx = A.row_ptr()[row]; idx < A.row_ptr()[row + 1]; ++idx) {
        const int col = A.col_index()[idx];
        trip.push_back({row, col, A.values()[idx]});
        if (row < col) ec.push_back({row, col, static_cast<int>(k) + 1});
      }
    doc.hecke.push_back(std::move(trip));
  }
  std::sort(ec.begin(), ec.end());
  doc.edge_colors = ec;
  return doc;
}

CsComplex cs_from_doc(const ComplexDoc& doc) {
  const json& p = doc.provenance;
  if (p.value("construction", "") != "cartwright-steger")
    throw InvalidInput("Hecke verdicts need a Cartwright-Steger complex document");
  if (doc.hecke.empty() || !doc.vertex_colors) throw InvalidInput("complex document lacks Hecke operators or colors");
  CsComplex cx;
  try {
    cx.d = p.at("d").get<int>();
    cx.q = p.at("q").get<std::uint64_t>();
    cx.e = p.at("e").get<int>();
    cx.t = p.at("t").get<int>();
    cx.theorem_guaranteed = p.at("theorem_guaranteed").get<bool>();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("bad provenance: ") + e.what());
  }
  if (static_cast<int>(doc.hecke.size()) != cx.d - 1) throw InvalidInput("expected d-1 Hecke operators");
  const int n = doc.vertex_count;
  cx.vertex_color = *doc.vertex_colors;
  if (static_cast<int>(cx.vertex_color.size()) != n) throw InvalidInput("vertex color count mismatch");
  for (int c : cx.vertex_color)
    if (c < 0 || c >= cx.t) throw InvalidInput("vertex color out of range");
  for (const auto& trip : doc.hecke) {
    std::vector<std::tuple<int, int, std::int64_t>> t;
    for (const auto& e : trip) {
      if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n) throw InvalidInput("Hecke entry out of range");
      t.emplace_back(static_cast<int>(e[0]), static_cast<int>(e[1]), e[2]);
    }
    cx.hecke.push_back(SparseMatrix::from_triplets(n, n, std::move(t)));
  }
  return cx;
}

ReportDoc cs_report(int d, std::uint64_t q, const std::string& ideal, int max_dim, std::uint64_t seed, ComplexDoc* doc) {
  ReportDoc r;
  r.operation = "cs";
  auto fq = FiniteField::of_order(q);
  const Poly g = parse_poly(fq, ideal);
  json coeffs = json::array();
  for (Elem c : g.coeffs()) coeffs.push_back(exact(c));
  r.parameters = {{"d", exact(d)}, {"q", exact_u(q)}, {"ideal", coeffs}, {"max_dim", exact(max_dim)}};
  r.seeds = {{"norm_equation", exact_u(seed)}};
  auto cx = cs_complex(d, q, g, max_dim, 1'000'000, seed);
  json sigma = json::array();
  u128 degree = 0;
  for (int i = 1; i < d; ++i) {
    const u128 want = gaussian_binomial(d, i, q);
    degree += want;
    sigma.push_back({{"color", exact(i)},
                     {"size", exact_u(cx.sigma_hat[i - 1].size())},
                     {"expected", u128_json(want)},
                     {"word_length", exact(cx.sigma.word_length[i - 1])},
                     {"candidates", exact_u(cx.sigma.candidates[i - 1])}});
    r.check("|Sigma_" + std::to_string(i) + "| = [d i]_q", cx.sigma_hat[i - 1].size() == static_cast<std::size_t>(want));
  }
  const auto trivial = trivial_eigenfunction_check(cx);
  r.tolerances = {{"trivial_eigenfunctions", 1e-9}};
  r.results = {{"vertices", exact_u(cx.group->size())},
               {"group", cx.group_name},
               {"pgl_order", exact_u(cx.pgl_order)},
               {"psl_order", exact_u(cx.psl_order)},
               {"e", exact(cx.e)},
               {"t_partite", exact(cx.t)},
               {"theorem_guaranteed", cx.theorem_guaranteed},
               {"sigma", sigma},
               {"degree", exact(cx.skeleton.regular_degree().value_or(-1))},
               {"face_counts", face_counts(cx.complex)},
               {"trivial_eigenfunction_error", measured(trivial.max_error, 1e-9)},
               {"summary", std::to_string(cx.group->size()) + " vertices (" + cx.group_name + "), " +
                               std::to_string(cx.skeleton.regular_degree().value_or(-1)) + "-regular, " +
                               std::to_string(cx.t) + "-partite"}};
  r.check("Cayley graph regular of degree sum_i [d i]_q", cx.skeleton.regular_degree() == static_cast<int>(degree));
  r.check("trivial eigenfunctions reproduce trivial tuples", trivial.max_error <= 1e-9);
  if (doc) *doc = cs_complex_doc(cx, seed);
  return r;
}

ReportDoc hecke_report(const ComplexDoc& doc, VerdictMode mode, double tol, std::uint64_t seed) {
  ReportDoc r;
  r.operation = "hecke";
  r.parameters = {{"mode", mode == VerdictMode::Full ? "full" : "extremal"}};
  r.seeds = {{"spectrum", exact_u(seed)}};
  auto cx = cs_from_doc(doc);
  auto v = cs_ramanujan_verdict(cx, mode, tol, seed);
  const double bound = ramanujan_bound(cx.d, cx.q);
  r.tolerances = {{"membership", tol}, {"trivial_eigenfunctions", 1e-9}};
  r.results = {{"vertices", exact(doc.vertex_count)},
               {"theorem_guaranteed", v.theorem_guaranteed},
               {"guarantee", v.theorem_guaranteed ? "theorem-guaranteed (q^e >= 4d^2)" : "empirical, not theorem-guaranteed"},
               {"bound", measured(bound, 1e-12)},
               {"trivial_eigenfunction_error", measured(v.trivial.max_error, 1e-9)}};
  r.check("trivial eigenfunctions reproduce trivial tuples", v.trivial.max_error <= 1e-9);
  if (mode == VerdictMode::Full) {
    const double rt = v.spectrum->residual_tol;
    r.tolerances["residual"] = rt;
    r.results["tuples"] = exact_u(v.spectrum->tuples.size());
    r.results["trivial"] = exact_u(v.verdict->trivial);
    r.results["inside"] = exact_u(v.verdict->inside);
    r.results["outside"] = exact_u(v.verdict->outside);
    r.results["asymmetric"] = exact_u(v.verdict->asymmetric);
    r.results["max_residual"] = measured(v.spectrum->max_residual, rt);
    r.results["max_nontrivial_abs_lambda1"] = measured(v.max_nontrivial_abs, rt);
    r.results["ramanujan"] = yes_no(v.verdict->ramanujan);
    r.results["summary"] = "Ramanujan: " + yes_no(v.verdict->ramanujan);
    r.check("every tuple trivial or in Sigma_d", v.verdict->ramanujan);
  } else {
    const auto& e = *v.extremal;
    r.tolerances["lanczos"] = 1e-8;
    r.results["spectral_radius"] = measured(e.spectral_radius, std::max(1e-8, e.residual));
    r.results["max_ritz"] = measured(e.max_ritz, std::max(1e-8, e.residual));
    r.results["min_ritz"] = measured(e.min_ritz, std::max(1e-8, e.residual));
    r.results["iterations"] = exact(e.iterations);
    r.results["converged"] = e.converged;
    r.results["summary"] = "extremal nontrivial |lambda| of sum A_k: " + std::to_string(e.spectral_radius) +
                           " vs bound " + std::to_string(bound);
    r.check("Lanczos converged", e.converged);
    r.check("spectral radius within the Sigma_d bound", e.spectral_radius <= bound * (1 + tol));
  }
  return r;
}

ReportDoc expand_report(const ComplexDoc& doc, const std::string& metric, int dim, std::uint64_t seed, int trials) {
  ReportDoc r;
  r.operation = "expand";
  r.parameters = {{"metric", metric}, {"dim", exact(dim)}};
  const SimplicialComplex X = to_complex(doc);
  if (dim < 0) throw InvalidInput("--dim must be nonnegative");
  if (metric == "cheeger") {
    if (dim < 1 || dim > X.dim()) throw InvalidInput("cheeger needs 1 <= dim <= dim X");
    const auto Xi = skeleton_of(X, dim);
    if (dim == 1) {
      auto c = cheeger_graph(Xi.skeleton());
      r.results = {{"h", ratio_json(c.h)}, {"hbar", ratio_json(c.hbar)}};
    } else {
      auto w = cheeger_highdim(Xi);
      r.results = {{"h", ratio_json(w.ratio)}, {"transversal_faces", exact(w.count)}};
    }
    try {
      auto v = validate_cheeger_inequalities(Xi);
      r.tolerances["cheeger"] = v.tol;
      r.results["lambda"] = measured(v.lambda, v.tol);
      r.results["lower"] = measured(v.lower, v.tol);
      r.results["upper"] = measured(v.upper, v.tol);
      r.results["k"] = exact(v.k);
      r.check("Cheeger inequalities", v.pass);
    } catch (const InvalidInput& e) {
      r.results["inequalities"] = std::string("not applicable: ") + e.what();
    }
  } else if (metric == "coboundary") {
    auto c = coboundary_expansion(X, dim);
    r.results = {{"E", ratio_json(c.E)},
                 {"E_normalized", measured(c.E_normalized, 1e-12)},
                 {"cohomology_vanishes", c.cohomology_vanishes},
                 {"summary", "E_" + std::to_string(dim) + " = " + std::to_string(c.E.num) + "/" + std::to_string(c.E.den) +
                                 (c.cohomology_vanishes ? "" : " (H^" + std::to_string(dim - 1) + " != 0)")}};
  } else if (metric == "filling") {
    auto f = filling(X, dim);
    r.results = {{"nu", ratio_json(f.nu)}};
  } else if (metric == "gap") {
    const double g = spectral_gap(X, dim);
    r.tolerances["gap"] = 1e-9;
    r.results = {{"lambda", measured(g, 1e-9)}};
  } else if (metric == "mixing") {
    if (dim < 1 || dim > X.dim()) throw InvalidInput("mixing needs 1 <= dim <= dim X");
    r.seeds = {{"mixing", exact_u(seed)}};
    auto m = validate_mixing(skeleton_of(X, dim), trials, seed);
    r.tolerances["mixing"] = m.tol;
    r.parameters["trials"] = exact(trials);
    r.results = {{"k", measured(m.k, 1e-12)}, {"mu0", measured(m.mu0, m.tol)}, {"trials", exact_u(m.trials.size())}};
    double worst = 0;
    for (const auto& t : m.trials) worst = std::max(worst, t.deviation - t.bound);
    r.results["worst_slack"] = measured(worst, m.tol);
    if (m.graph_mu0) r.results["graph_mu0"] = measured(*m.graph_mu0, m.tol);
    r.check("mixing inequality on every trial", m.pass);
  } else {
    throw InvalidInput("unknown metric '" + metric + "'");
  }
  return r;
}

ReportDoc overlap_report(const ComplexDoc& doc, int trials, std::uint64_t seed) {
  ReportDoc r;
  r.operation = "overlap";
  r.parameters = {{"trials", exact(trials)}};
  r.seeds = {{"embedding", exact_u(seed)}};
  const SimplicialComplex X = to_complex(doc);
  auto o = overlap_estimate(X, trials, seed);
  json fr = json::array();
  for (double f : o.fractions) fr.push_back(measured(f, 1e-12));
  r.results = {{"upper_bound", measured(o.upper_bound, 1e-12)}, {"worst_trial", exact(o.worst_trial)}, {"fractions", fr}};
  return r;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"rlab: Ramanujan graphs and complexes"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: RLAB_THREADS or hardware)");

  std::uint32_t p = 0, q32 = 0;
  std::string out_path, input, metric, ideal, mode = "full";
  int d = 0, radius = 0, dim = 1, max_dim = -1, trials = 20;
  std::uint64_t q = 0, seed = 0;
  bool ramanujan = false;
  double tol = 1e-6;

  auto* lps = app.add_subcommand("lps", "LPS graph X^{p,q}");
  lps->add_option("--p", p)->required();
  lps->add_option("--q", q32)->required();
  lps->add_option("--out", out_path);

  auto* spec = app.add_subcommand("spectrum", "adjacency spectrum of a graph document");
  spec->add_option("graph", input)->required();
  spec->add_flag("--ramanujan", ramanujan);

  auto* ball = app.add_subcommand("ball", "ball in the building of PGL_d(F_q((y)))");
  ball->add_option("--d", d)->required();
  ball->add_option("--q", q)->required();
  ball->add_option("--r", radius)->required();
  ball->add_option("--out", out_path);

  auto* cs = app.add_subcommand("cs", "Cartwright-Steger complex");
  cs->add_option("--d", d)->required();
  cs->add_option("--q", q)->required();
  cs->add_option("--ideal", ideal, "e.g. y^4+y+1 or [1,1,0,0,1]")->required();
  cs->add_option("--max-dim", max_dim);
  cs->add_option("--seed", seed);
  cs->add_option("--out", out_path);

  auto* hecke = app.add_subcommand("hecke", "Hecke spectrum verdict of a CS complex document");
  hecke->add_option("complex", input)->required();
  hecke->add_option("--mode", mode)->check(CLI::IsMember({"full", "extremal"}));
  hecke->add_option("--tol", tol);
  hecke->add_option("--seed", seed);

  auto* expand = app.add_subcommand("expand", "expansion measures");
  expand->add_option("complex", input)->required();
  expand->add_option("--metric", metric)->required()->check(CLI::IsMember({"cheeger", "coboundary", "filling", "gap", "mixing"}));
  expand->add_option("--dim", dim)->required();
  expand->add_option("--seed", seed);
  expand->add_option("--trials", trials);

  auto* overlap = app.add_subcommand("overlap", "random-embedding overlap estimate");
  overlap->add_option("complex", input)->required();
  overlap->add_option("--trials", trials)->required();
  overlap->add_option("--seed", seed)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (threads > 0) set_thread_count(threads);

  auto load_complex = [&](const std::string& path) {
    json j = read_json_file(path);
    if (j.value("kind", "") == "graph") return complex_doc(graph_from_json(j));
    return complex_from_json(j);
  };
  try {
    ReportDoc report;
    if (*lps) {
      GraphDoc g;
      report = lps_report(p, q32, &g);
      if (!out_path.empty()) write_text_file(out_path, to_json(g).dump() + "\n");
    } else if (*spec) {
      report = spectrum_report(graph_from_json(read_json_file(input)), ramanujan);
    } else if (*ball) {
      ComplexDoc c;
      report = ball_report(d, q, radius, &c);
      if (!out_path.empty()) write_text_file(out_path, to_json(c).dump() + "\n");
    } else if (*cs) {
      ComplexDoc c;
      report = cs_report(d, q, ideal, max_dim, seed, &c);
      if (!out_path.empty()) write_text_file(out_path, to_json(c).dump() + "\n");
    } else if (*hecke) {
      report = hecke_report(complex_from_json(read_json_file(input)),
                            mode == "full" ? VerdictMode::Full : VerdictMode::Extremal, tol, seed);
    } else if (*expand) {
      report = expand_report(load_complex(input), metric, dim, seed, trials);
    } else if (*overlap) {
      report = overlap_report(load_complex(input), trials, seed);
    }
    out << dump(to_json(report));
    if (report.results.contains("summary")) err << report.results["summary"].get<std::string>() << "\n";
    return report.pass ? kExitOk : kExitChecksFailed;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "check failed: " << e.what() << "\n";
    return kExitChecksFailed;
  }
}

}  // namespace rlab
