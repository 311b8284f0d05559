#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace rlab {

bool is_prime(std::uint64_t n);
/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, int>> prime_power(std::uint64_t q);

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m);

/// Legendre symbol by Euler's criterion. Throws InvalidInput unless q is an odd prime.
int legendre(std::int64_t a, std::uint64_t q);

/// Least positive e with e^2 = -1 mod q. Throws InvalidInput unless q is a prime = 1 mod 4.
std::uint64_t sqrt_minus_one(std::uint64_t q);

}  // namespace rlab
