#include "rlab/lps.hpp"

#include <cmath>
#include <string>

#include "rlab/algebra/number_theory.hpp"
#include "rlab/errors.hpp"

namespace rlab {

namespace {

void require_prime_1mod4(std::uint32_t v, const char* name) {
  if (!is_prime(v)) throw InvalidInput(std::string(name) + " = " + std::to_string(v) + " is not prime");
  if (v % 4 != 1) throw InvalidInput(std::string(name) + " = " + std::to_string(v) + " is not 1 mod 4");
}

}  // namespace

std::vector<QuaternionSolution> jacobi_solutions(std::uint32_t p) {
  require_prime_1mod4(p, "p");
  const int s = static_cast<int>(std::sqrt(static_cast<double>(p))) + 1;
  const int ip = static_cast<int>(p);
  std::vector<QuaternionSolution> out;
  for (int x0 = 1; x0 <= s; x0 += 2)
    for (int x1 = -s; x1 <= s; ++x1)
      for (int x2 = -s; x2 <= s; ++x2)
        for (int x3 = -s; x3 <= s; ++x3)
          if (x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3 == ip) out.push_back({x0, x1, x2, x3});
  if (out.size() != p + 1)
    throw VerificationFailure("found " + std::to_string(out.size()) + " solutions, expected " + std::to_string(p + 1));
  return out;
}

std::vector<ProjMatrix> lps_generators(std::uint32_t p, std::uint32_t q) {
  require_prime_1mod4(p, "p");
  require_prime_1mod4(q, "q");
  if (p == q) throw InvalidInput("p and q must be distinct");
  if (static_cast<std::uint64_t>(q) * q <= 4ull * p) throw InvalidInput("q must exceed 2*sqrt(p)");
  auto f = FiniteField::prime(q);
  const std::int64_t eps = static_cast<std::int64_t>(sqrt_minus_one(q));
  std::vector<ProjMatrix> gens;
  for (const auto& x : jacobi_solutions(p)) {
    FMatrix m(f, 2, 2);
    m(0, 0) = f->from_int(x[0] + eps * x[1]);
    m(0, 1) = f->from_int(x[2] + eps * x[3]);
    m(1, 0) = f->from_int(-x[2] + eps * x[3]);
    m(1, 1) = f->from_int(x[0] - eps * x[1]);
    if (m.det() == 0) throw InvalidInput("singular generator: q is too small for p");
    gens.push_back(proj_canonical(m));
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] == gens[j]) throw InvalidInput("generators collide projectively: q is too small for p");
  return gens;
}

LpsGraph lps_graph(std::uint32_t p, std::uint32_t q, std::size_t cap, bool compute_girth) {
  LpsGraph out;
  out.p = p;
  out.q = q;
  out.solutions = jacobi_solutions(p);
  out.generators = lps_generators(p, q);
  MatrixGroup group = group_closure(out.generators, cap);
  auto table = right_multiplication_table(group, out.generators);
  out.graph = Graph::from_neighbor_table(table);
  if (out.graph.regular_degree() != static_cast<int>(p + 1)) throw VerificationFailure("LPS graph is not (p+1)-regular");
  if (!out.graph.is_connected()) throw VerificationFailure("LPS graph is disconnected");
  const bool predict_pgl = legendre(p, q) == -1;
  const std::uint64_t pgl = pgl_order(2, q);
  const bool is_pgl = group.size() == pgl;
  if (!is_pgl && group.size() != pgl / 2)
    throw VerificationFailure("generated group has unexpected order " + std::to_string(group.size()));
  const bool bip = out.graph.bipartition().has_value();
  if (is_pgl != predict_pgl || bip != predict_pgl)
    throw VerificationFailure("LPS structure disagrees with the Legendre-symbol prediction");
  out.pgl = is_pgl;
  out.bipartite = bip;
  if (compute_girth) out.girth = out.graph.girth();
  return out;
}

}  // namespace rlab
