#include "rlab/algebra/group.hpp"

#include <numeric>

#include "rlab/errors.hpp"
#include "rlab/parallel.hpp"

namespace rlab {

std::size_t MatrixGroup::KeyHash::operator()(const std::vector<Elem>& v) const {
  std::uint64_t h = 1469598103934665603ull;
  for (Elem e : v) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

MatrixGroup::MatrixGroup(FieldPtr field, int n) : field_(std::move(field)), n_(n) {}

ProjMatrix MatrixGroup::element(std::size_t i) const {
  const std::size_t sz = static_cast<std::size_t>(n_) * n_;
  if (i >= count_) throw InvalidInput("group element index out of range");
  std::vector<Elem> data(flat_.begin() + i * sz, flat_.begin() + (i + 1) * sz);
  return proj_canonical(FMatrix(field_, n_, n_, std::move(data)));
}

std::optional<std::uint32_t> MatrixGroup::index_of(const ProjMatrix& m) const {
  auto it = index_.find(m.matrix().data());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t MatrixGroup::insert(const ProjMatrix& m) {
  if (m.dim() != n_ || !same_field(m.field(), field_)) throw InvalidInput("element does not belong to this group");
  auto [it, fresh] = index_.emplace(m.matrix().data(), static_cast<std::uint32_t>(count_));
  if (fresh) {
    flat_.insert(flat_.end(), m.matrix().data().begin(), m.matrix().data().end());
    ++count_;
  }
  return it->second;
}

std::optional<std::uint32_t> MatrixGroup::right_multiply(std::size_t i, const ProjMatrix& g) const {
  return index_of(element(i) * g);
}

MatrixGroup group_closure(const std::vector<ProjMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw InvalidInput("group closure needs at least one generator");
  if (cap == 0) throw InvalidInput("group closure cap must be positive");
  const FieldPtr field = generators[0].field();
  const int n = generators[0].dim();
  for (const auto& g : generators)
    if (g.dim() != n || !same_field(g.field(), field)) throw InvalidInput("generators differ in field or dimension");
  MatrixGroup group(field, n);
  group.insert(proj_canonical(FMatrix::identity(field, n)));
  for (std::size_t head = 0; head < group.size(); ++head) {
    const ProjMatrix x = group.element(head);
    for (const auto& g : generators) {
      group.insert(x * g);
      if (group.size() > cap) throw CapExceeded("group closure exceeded cap " + std::to_string(cap));
    }
  }
  return group;
}

std::vector<std::vector<int>> right_multiplication_table(const MatrixGroup& group,
                                                         const std::vector<ProjMatrix>& gens) {
  std::vector<std::vector<int>> table(group.size(), std::vector<int>(gens.size()));
  parallel_for(group.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t x = b; x < e; ++x) {
      const ProjMatrix gx = group.element(x);
      for (std::size_t s = 0; s < gens.size(); ++s) {
        auto idx = group.index_of(gx * gens[s]);
        if (!idx) throw VerificationFailure("group is not closed under the generator set");
        table[x][s] = static_cast<int>(*idx);
      }
    }
  });
  return table;
}

std::uint64_t pgl_order(int n, std::uint64_t Q) {
  unsigned __int128 r = 1;
  for (int i = 0; i < n * (n - 1) / 2; ++i) r *= Q;
  unsigned __int128 qi = Q;
  for (int i = 2; i <= n; ++i) {
    qi *= Q;
    r *= (qi - 1);
    if (r > static_cast<unsigned __int128>(UINT64_MAX)) throw CapExceeded("group order overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t psl_order(int n, std::uint64_t Q) {
  return pgl_order(n, Q) / std::gcd(static_cast<std::uint64_t>(n), Q - 1);
}

}  // namespace rlab
