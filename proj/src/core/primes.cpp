#include "primes.hpp"

#include <string>

#include "error.hpp"

namespace arakx0 {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // these bases are a deterministic witness set below 2^64
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_prime(std::uint64_t n) {
  if (!is_prime(n)) fail(ErrorCode::NotPrime, std::to_string(n) + " is not prime");
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == UINT64_MAX) break;
  }
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::Domain, "euler_phi(0)");
  std::uint64_t result = n;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    while (n % q == 0) n /= q;
    result -= result / q;
  }
  if (n > 1) result -= result / n;
  return result;
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p < 3 || p % 2 == 0) fail(ErrorCode::Domain, "legendre: p must be an odd prime");
  std::int64_t ps = static_cast<std::int64_t>(p);
  std::uint64_t r = static_cast<std::uint64_t>(((a % ps) + ps) % ps);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

}  // namespace arakx0
