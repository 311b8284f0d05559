#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rlab/algebra/group.hpp"
#include "rlab/graph.hpp"

namespace rlab {

/// (x0, x1, x2, x3) with x0^2 + x1^2 + x2^2 + x3^2 = p, x0 odd and positive.
using QuaternionSolution = std::array<int, 4>;

/// The p+1 solutions, lexicographically ordered. Requires p prime, p = 1 mod 4.
std::vector<QuaternionSolution> jacobi_solutions(std::uint32_t p);

/// The matrices [[x0 + e x1, x2 + e x3], [-x2 + e x3, x0 - e x1]] over F_q,
/// e^2 = -1, one per solution and in the same order.
std::vector<ProjMatrix> lps_generators(std::uint32_t p, std::uint32_t q);

struct LpsGraph {
  std::uint32_t p = 0, q = 0;
  Graph graph;
  std::vector<QuaternionSolution> solutions;
  std::vector<ProjMatrix> generators;
  bool pgl = false;        // H = PGL_2(F_q) (otherwise PSL_2(F_q))
  bool bipartite = false;  // verified against the predicted value
  std::optional<int> girth;
};

/// Cay(H; generators) with H the generated subgroup. The Legendre symbol
/// (p/q) predicts PGL + bipartite (-1) or PSL + non-bipartite (+1); a
/// mismatch raises VerificationFailure.
LpsGraph lps_graph(std::uint32_t p, std::uint32_t q, std::size_t cap = 2'000'000, bool compute_girth = false);

}  // namespace rlab
