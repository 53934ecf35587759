#pragma once

#include <cstdint>
#include <vector>

namespace arakx0 {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Throws ErrorCode::NotPrime when n is not prime.
void require_prime(std::uint64_t n);

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi);

std::uint64_t euler_phi(std::uint64_t n);

// Legendre symbol (a/p) for an odd prime p.
int legendre(std::int64_t a, std::uint64_t p);

}  // namespace arakx0
