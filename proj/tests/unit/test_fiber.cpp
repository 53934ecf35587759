#include "doctest.h"
#include "error.hpp"
#include "fiber.hpp"
#include "oracles.hpp"
#include "primes.hpp"

using namespace arakx0;

namespace {

std::vector<std::vector<mpq_class>> table_of(const fiber::FiberModel& f) {
  std::vector<std::vector<mpq_class>> m(f.size(), std::vector<mpq_class>(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) m[i][j] = f.inter[i][j];
  return m;
}

}  // namespace

TEST_CASE("Edixhoven tables match the four residue-class tables") {
  for (std::uint64_t p : primes_between(7, 400)) {
    auto f = fiber::edixhoven_fiber(p);
    auto ref = oracle::fiber_table(p);
    REQUIRE(f.size() == 5);
    CHECK(table_of(f) == ref.m);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(mpq_class(f.components[i].multiplicity) == ref.mult[i]);
      CHECK(f.components[i].arith_genus == 0);
    }
  }
  auto f = fiber::edixhoven_fiber(13);
  CHECK(f.components[0].name == "C20");
  CHECK(f.at("C11", "C11") == -1);
  CHECK(f.at("C20", "C02") == 1);
  CHECK_THROWS_AS(fiber::edixhoven_fiber(5), Error);
  CHECK_THROWS_AS(fiber::edixhoven_fiber(15), Error);
}

TEST_CASE("fiber invariants hold exactly for 7 <= p <= 200") {
  for (std::uint64_t p : primes_between(7, 200)) {
    auto f = fiber::edixhoven_fiber(p);
    auto chk = fiber::validate(f);
    CHECK(chk.ok());
    auto m = table_of(f);
    auto mult = oracle::fiber_table(p).mult;
    for (std::size_t i = 0; i < 5; ++i) {
      std::vector<mpq_class> e(5, 0);
      e[i] = 1;
      CHECK(oracle::dot(m, mult, e) == 0);
    }
    CHECK(oracle::rank(m) == 4);
    // adjunction: K.C = -C^2 - 2 for rational C, weighted sum 2g - 2
    mpq_class sum = 0;
    auto k = fiber::canonical_degrees(f);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(k[i] == -m[i][i] - 2);
      sum += mult[i] * k[i];
    }
    CHECK(sum == 2 * oracle::genus(p) - 2);
    CHECK(fiber::adjunction_sum(f) == sum);
    auto mu = fiber::derive_multiplicities(f.inter);
    for (std::size_t i = 0; i < 5; ++i) CHECK(mu[i] == mult[i]);
  }
}

TEST_CASE("a broken table is caught") {
  auto f = fiber::edixhoven_fiber(13);
  f.inter[3][3] = -3;
  auto chk = fiber::validate(f);
  CHECK(!chk.fiber_relation);
  CHECK(!chk.ok());
  auto g = fiber::edixhoven_fiber(13);
  g.inter[0][1] += 1;
  CHECK(!fiber::validate(g).symmetric);
}

TEST_CASE("blow-down of C11 at p = 13") {
  auto f = fiber::edixhoven_fiber(13);
  auto ix = fiber::contractible(f);
  REQUIRE(ix.size() == 1);
  CHECK(f.components[ix[0]].name == "C11");
  auto bd = fiber::blow_down(f, ix[0]);
  CHECK(bd.model.size() == 4);
  // D'.E' = D.E + (D.X)(E.X)
  CHECK(bd.model.at("E'", "E'") == -1);
  CHECK(bd.model.at("F'", "F'") == -2);
  CHECK(bd.model.at("C20'", "C02'") == 2);
  CHECK(bd.model.at("C20'", "C20'") == -12);
  CHECK(fiber::validate(bd.model).ok());
  CHECK_THROWS_AS(fiber::blow_down(f, 0), Error);
}

TEST_CASE("minimal model: two components, [[-s, s], [s, -s]] and the pullback formulas") {
  for (std::uint64_t p : primes_between(7, 200)) {
    auto mm = fiber::minimal_model(fiber::edixhoven_fiber(p));
    REQUIRE(mm.model.size() == 2);
    const mpq_class s = oracle::rat(static_cast<long>(p * p - 1), 24);
    CHECK(mm.model.inter[0][0] == -s);
    CHECK(mm.model.inter[1][1] == -s);
    CHECK(mm.model.inter[0][1] == s);
    CHECK(mm.contracted.size() == 3);
    auto c20 = oracle::pullback_c20(p);
    auto c02 = c20;
    std::swap(c02[0], c02[1]);
    CHECK(mm.pullback.coeffs[0] == c20);
    CHECK(mm.pullback.coeffs[1] == c02);
    // the pullbacks are orthogonal to every contracted curve
    auto m = oracle::fiber_table(p).m;
    for (std::size_t i = 2; i < 5; ++i) {
      std::vector<mpq_class> e(5, 0);
      e[i] = 1;
      CHECK(oracle::dot(m, c20, e) == 0);
      CHECK(oracle::dot(m, c02, e) == 0);
    }
    CHECK(oracle::dot(m, c20, c02) == s);
    CHECK(fiber::pullbacks_orthogonal(fiber::edixhoven_fiber(p), mm));
  }
}

TEST_CASE("contraction log at p = 13") {
  auto mm = fiber::minimal_model(fiber::edixhoven_fiber(13));
  CHECK(mm.contracted == std::vector<std::string>{"C11", "E'", "F''"});
  CHECK(mm.model.components[0].name == "C20'");
  CHECK(mm.model.components[0].arith_genus == 1);
  auto k = fiber::canonical_degrees(mm.model);
  CHECK(k[0] == 7);
  CHECK(k[1] == 7);
}

TEST_CASE("exact rank") {
  fiber::RatMatrix m = {{1, 2}, {2, 4}};
  CHECK(fiber::rank(m) == 1);
  fiber::RatMatrix n = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(fiber::rank(n) == 3);
}
