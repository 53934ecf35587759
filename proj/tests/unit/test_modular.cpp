#include <numeric>

#include "doctest.h"
#include "error.hpp"
#include "modular.hpp"
#include "oracles.hpp"
#include "primes.hpp"

using namespace arakx0;
using doctest::Approx;

TEST_CASE("primality against trial division") {
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
  CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
  CHECK(!is_prime(3825123056546413051ULL));  // strong pseudoprime to bases 2..23
  CHECK(is_prime(18446744073709551557ULL));  // largest prime below 2^64
  CHECK(!is_prime(18446744073709551615ULL));
}

TEST_CASE("require_prime reports not prime") {
  try {
    require_prime(12);
    FAIL("no exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotPrime);
    CHECK(std::string(e.what()).find("not prime") != std::string::npos);
  }
}

TEST_CASE("primes_between and euler_phi") {
  auto ps = primes_between(10, 50);
  CHECK(ps == std::vector<std::uint64_t>{11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47});
  CHECK(primes_between(24, 28).empty());
  for (std::uint64_t n = 1; n < 500; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t d = 1; d <= n; ++d)
      if (std::gcd(d, n) == 1) ++count;
    REQUIRE(euler_phi(n) == count);
  }
}

TEST_CASE("Legendre symbol against Euler's criterion") {
  for (std::uint64_t p : primes_between(3, 400))
    for (std::int64_t a : {-4, -3, -1, 0, 1, 2, 3, 5, 7, 10, 101})
      CHECK(legendre(a, p) == oracle::legendre(a, p));
}

TEST_CASE("genus against the closed formula") {
  for (std::uint64_t p : primes_between(5, 2000)) {
    mpq_class g = oracle::genus(p);
    REQUIRE(g.get_den() == 1);
    CHECK(modular::genus(p) == g.get_num().get_si());
  }
  CHECK(modular::genus(13) == 8);
  CHECK(modular::genus(11) == 6);
  CHECK(modular::genus(7) == 1);
  CHECK(modular::genus(5) == 0);
}

TEST_CASE("genus correction constant by residue class") {
  CHECK(modular::c_of(13) == oracle::rat(7, 6));
  CHECK(modular::c_of(5) == oracle::rat(1, 2));
  CHECK(modular::c_of(7) == oracle::rat(2, 3));
  CHECK(modular::c_of(11) == 0);
}

TEST_CASE("index, cusps and volume") {
  for (std::uint64_t p : {5ULL, 7ULL, 11ULL, 13ULL, 101ULL}) {
    CHECK(modular::index(p) == static_cast<std::int64_t>(p * (p + 1)));
    CHECK(modular::cusps(p).size() == p + 1);
    CHECK(modular::volume(p) == Approx(oracle::volume(p)).epsilon(1e-15));
    // hyperbolic area is pi/3 times the index
    CHECK(modular::volume(p) == Approx(oracle::pi / 3 * modular::index(p)).epsilon(1e-15));
  }
  auto cs = modular::cusps(7);
  CHECK(cs[0].den == 0);
  CHECK(cs[1].num == 0);
}

TEST_CASE("curve_level rejects bad primes") {
  CHECK_THROWS_AS(modular::curve_level(12), Error);
  CHECK_THROWS_AS(modular::curve_level(3), Error);
  auto lv = modular::curve_level(13);
  CHECK(lv.level == 169);
  CHECK(lv.residue == 1);
  CHECK(lv.genus == 8);
}
