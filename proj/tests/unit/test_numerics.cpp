#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "error.hpp"
#include "laurent.hpp"
#include "oracles.hpp"
#include "rational.hpp"
#include "special.hpp"

using namespace arakx0;
using doctest::Approx;

TEST_CASE("zeta agrees with the Euler-Maclaurin reference on the real axis") {
  for (double s : {0.3, 0.75, 1.01, 1.5, 2.0, 3.0, 4.5, 10.0, 25.0}) {
    double ref = oracle::zeta(s);
    CHECK(num::riemann_zeta(s).real() == Approx(ref).epsilon(1e-13));
  }
  CHECK(num::riemann_zeta(3.0).real() == Approx(1.2020569031595942).epsilon(1e-15));
  CHECK(num::riemann_zeta(2.0).real() == Approx(oracle::pi * oracle::pi / 6).epsilon(1e-15));
}

TEST_CASE("zeta remainder bound covers the actual error") {
  for (double s : {1.2, 2.0, 3.0, 6.0}) {
    auto z = num::riemann_zeta_with_bound(s);
    CHECK(std::abs(z.value.real() - oracle::zeta(s)) <= z.remainder_bound + 4e-16 * oracle::zeta(s));
    CHECK(z.remainder_bound < 1e-14);
  }
}

TEST_CASE("zeta is real on the real axis and commutes with conjugation") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(0.2, 6.0), im(-30.0, 30.0);
  for (int i = 0; i < 50; ++i) {
    num::Cplx s{re(rng), im(rng)};
    auto a = num::riemann_zeta(s), b = num::riemann_zeta(std::conj(s));
    CHECK(std::abs(a - std::conj(b)) <= 1e-13 * std::max(1.0, std::abs(a)));
  }
  CHECK(num::riemann_zeta(2.5).imag() == 0.0);
}

TEST_CASE("zeta outside its domain") {
  CHECK_THROWS_AS(num::riemann_zeta(1.0), Error);
  CHECK_THROWS_AS(num::riemann_zeta(-0.5), Error);
}

TEST_CASE("zeta'(2) against a finite difference of the reference and a frozen value") {
  const double h = 1e-4;
  double fd = (oracle::zeta(2 - 2 * h) - 8 * oracle::zeta(2 - h) + 8 * oracle::zeta(2 + h) - oracle::zeta(2 + 2 * h)) /
              (12 * h);
  CHECK(num::zeta_prime_at_2() == Approx(fd).epsilon(1e-9));
  CHECK(num::zeta_prime_at_2() == Approx(-0.93754825431584375).epsilon(1e-14));
}

TEST_CASE("gamma and log gamma against the C library") {
  for (double x : {0.1, 0.5, 1.0, 1.5, 2.7, 7.25, 20.0}) {
    CHECK(num::gamma_fn(x).real() == Approx(std::tgamma(x)).epsilon(1e-13));
    CHECK(num::log_gamma(x).real() == Approx(std::lgamma(x)).epsilon(1e-13));
  }
  CHECK(num::gamma_fn(0.5).real() == Approx(std::sqrt(oracle::pi)).epsilon(1e-15));
}

TEST_CASE("gamma recurrence off the real axis") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(0.3, 5.0), im(-4.0, 4.0);
  for (int i = 0; i < 40; ++i) {
    num::Cplx s{re(rng), im(rng)};
    auto lhs = num::gamma_fn(s + 1.0), rhs = s * num::gamma_fn(s);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
  }
}

TEST_CASE("digamma") {
  CHECK(num::digamma(1.0) == Approx(-num::kEulerGamma).epsilon(1e-14));
  CHECK(num::digamma(0.5) == Approx(-num::kEulerGamma - 2 * num::kLn2).epsilon(1e-14));
  for (double x : {0.7, 2.0, 5.5}) {
    const double h = 1e-5;
    double fd = (std::lgamma(x + h) - std::lgamma(x - h)) / (2 * h);
    CHECK(num::digamma(x) == Approx(fd).epsilon(1e-8));
  }
}

TEST_CASE("even Bernoulli numbers") {
  CHECK(num::bernoulli_even(1) == Approx(1.0 / 6));
  CHECK(num::bernoulli_even(2) == Approx(-1.0 / 30));
  CHECK(num::bernoulli_even(6) == Approx(-691.0 / 2730));
  CHECK(num::bernoulli_even(10) == Approx(-174611.0 / 330));
  CHECK_THROWS_AS(num::bernoulli_even(0), Error);
}

TEST_CASE("compensated summation is order independent on cancelling data") {
  std::mt19937_64 rng(3);
  std::vector<double> xs;
  for (int i = 0; i < 1000; ++i) {
    xs.push_back(1e16);
    xs.push_back(1.0);
    xs.push_back(-1e16);
  }
  for (int trial = 0; trial < 5; ++trial) {
    CHECK(num::kahan_total(xs) == 1000.0);
    std::shuffle(xs.begin(), xs.end(), rng);
  }
}

TEST_CASE("Laurent product matches pointwise products near the expansion point") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    num::LaurentPiece x{u(rng), u(rng), u(rng), 1};
    num::LaurentPiece y{0.0, u(rng), u(rng), 1};
    auto z = num::laurent_mul(x, y);
    CHECK(z.order == 0);  // the pole costs one order
    num::LaurentPiece x0{0.0, x.constant, x.linear, 1};
    auto z0 = num::laurent_mul(x0, y);
    CHECK(z0.order == 1);
    for (double h : {1e-3, -1e-3}) {
      CHECK(std::abs(z.evaluate(h) - x.evaluate(h) * y.evaluate(h)) <= 10.0 * std::abs(h));
      CHECK(std::abs(z0.evaluate(h) - x0.evaluate(h) * y.evaluate(h)) <= 4.0 * h * h);
    }
  }
  CHECK_THROWS_AS(num::laurent_mul({1, 0, 0, 1}, {1, 0, 0, 1}), Error);
}

TEST_CASE("Laurent sum and scale") {
  num::LaurentPiece a{1, 2, 3, 1}, b{0.5, -1, 0, 0};
  auto s = num::laurent_add(a, b);
  CHECK(s.pole == 1.5);
  CHECK(s.constant == 1.0);
  CHECK(s.order == 0);
  CHECK(s.linear == 0.0);
  auto t = num::laurent_scale(a, -2);
  CHECK(t.pole == -2);
  CHECK(t.linear == -6);
}

TEST_CASE("zeta(2s-1) expansion at s = 1") {
  auto z = num::zeta_2sm1_laurent();
  for (double h : {1e-2, 5e-3, -5e-3}) {
    double ref = oracle::zeta(1 + 2 * h);
    CHECK(std::abs(z.evaluate(h) - ref) <= 40 * h * h);
  }
}

TEST_CASE("rationals are canonical and print as num/den") {
  Rat r = make_rat(6, -4);
  CHECK(rat_str(r) == "-3/2");
  CHECK(rat_fraction_str(make_rat(10, 5)) == "2/1");
  CHECK(rat_str(make_rat(10, 5)) == "2");
  CHECK(is_integer(make_rat(10, 5)));
  CHECK_THROWS_AS(make_rat(1, 0), Error);
  CHECK(to_i64(int_from(std::int64_t{-9007199254740993})) == -9007199254740993);
  CHECK_THROWS_AS(to_i64(Int("100000000000000000000")), Error);
}

TEST_CASE("rational field identities on random data") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> u(-50, 50);
  for (int i = 0; i < 200; ++i) {
    long d1 = u(rng), d2 = u(rng), d3 = u(rng);
    if (!d1 || !d2 || !d3) continue;
    Rat a = make_rat(u(rng), d1), b = make_rat(u(rng), d2), c = make_rat(u(rng), d3);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
  }
}
