#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rlab/algebra/matrix.hpp"

namespace rlab {

/// Finite subgroup of PGL_n(F) held as canonical projective representatives
/// in a flat array, with a hash index.
class MatrixGroup {
 public:
  MatrixGroup(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int dim() const { return n_; }
  std::size_t size() const { return count_; }
  ProjMatrix element(std::size_t i) const;
  std::optional<std::uint32_t> index_of(const ProjMatrix& m) const;
  /// Appends when new; returns the index either way.
  std::uint32_t insert(const ProjMatrix& m);
  /// Index of element(i) * g.
  std::optional<std::uint32_t> right_multiply(std::size_t i, const ProjMatrix& g) const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Elem>& v) const;
  };
  FieldPtr field_;
  int n_;
  std::size_t count_ = 0;
  std::vector<Elem> flat_;
  std::unordered_map<std::vector<Elem>, std::uint32_t, KeyHash> index_;
};

/// Closure of the generators under right multiplication, in BFS order from
/// the identity (generator order fixes the traversal). CapExceeded past `cap`.
MatrixGroup group_closure(const std::vector<ProjMatrix>& generators, std::size_t cap);

/// table[x][s] = index of element(x) * gens[s]. VerificationFailure when a
/// product leaves the group.
std::vector<std::vector<int>> right_multiplication_table(const MatrixGroup& group,
                                                         const std::vector<ProjMatrix>& gens);

/// |PGL_n(F_Q)| and |PSL_n(F_Q)| (exact, throws CapExceeded on overflow).
std::uint64_t pgl_order(int n, std::uint64_t Q);
std::uint64_t psl_order(int n, std::uint64_t Q);

}  // namespace rlab
