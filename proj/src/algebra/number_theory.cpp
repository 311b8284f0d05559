#include "rlab/algebra/number_theory.hpp"

#include <string>

#include "rlab/errors.hpp"

namespace rlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint32_t, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = prime_factors(q);
  if (f.size() != 1) return std::nullopt;
  int k = 0;
  while (q > 1) {
    q /= f[0];
    ++k;
  }
  return std::make_pair(static_cast<std::uint32_t>(f[0]), k);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 r = 1 % m, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

int legendre(std::int64_t a, std::uint64_t q) {
  if (q == 2 || !is_prime(q))
    throw InvalidInput("legendre: modulus " + std::to_string(q) + " is not an odd prime");
  auto r = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) %
                                      static_cast<std::int64_t>(q));
  if (r == 0) return 0;
  return powmod_u64(r, (q - 1) / 2, q) == 1 ? 1 : -1;
}

std::uint64_t sqrt_minus_one(std::uint64_t q) {
  if (!is_prime(q) || q % 4 != 1)
    throw InvalidInput("sqrt_minus_one: " + std::to_string(q) + " is not a prime = 1 mod 4");
  for (std::uint64_t e = 1; e < q; ++e)
    if ((e * e + 1) % q == 0) return e;
  throw VerificationFailure("sqrt_minus_one: no root found");
}

}  // namespace rlab
