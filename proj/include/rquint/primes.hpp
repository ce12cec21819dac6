#pragma once

#include <cstdint>
#include <vector>

namespace rquint {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Primes p <= limit, ascending (Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace rquint
