#include "modular.hpp"

#include <cmath>

#include "primes.hpp"
#include "special.hpp"

namespace arakx0::modular {

namespace {

void require_prime_at_least_5(std::uint64_t p) {
  require_prime(p);
  if (p < 5) fail(ErrorCode::InvalidArgument, "genus data needs p >= 5, got " + std::to_string(p));
}

}  // namespace

Rat c_of(std::uint64_t p) {
  require_prime_at_least_5(p);
  switch (p % 12) {
    case 1: return make_rat(7, 6);
    case 5: return make_rat(1, 2);
    case 7: return make_rat(2, 3);
    case 11: return make_rat(0);
  }
  fail(ErrorCode::Inconsistent, "prime >= 5 outside the residue classes 1,5,7,11 mod 12");
}

std::int64_t genus(std::uint64_t p) {
  Rat c = c_of(p);
  Int pp = int_from(p);
  Rat g = 1 + (Rat((pp + 1) * (pp - 6)) - 12 * c) / 12;
  if (!is_integer(g)) fail(ErrorCode::Inconsistent, "non-integral genus for p = " + std::to_string(p));
  return to_i64(g.get_num());
}

std::vector<Cusp> cusps(std::uint64_t p) {
  require_prime(p);
  std::int64_t ps = static_cast<std::int64_t>(p);
  std::vector<Cusp> out;
  out.reserve(p + 1);
  out.push_back({1, 0, "inf"});
  out.push_back({0, 1, "0"});
  for (std::int64_t l = 1; l < ps; ++l) {
    std::int64_t den = l * ps;
    out.push_back({1, den, "1/" + std::to_string(den)});
  }
  return out;
}

double volume(std::uint64_t p) {
  require_prime(p);
  double pd = static_cast<double>(p);
  return num::kPi / 3.0 * pd * (pd + 1.0);
}

std::int64_t index(std::uint64_t p) {
  require_prime(p);
  return static_cast<std::int64_t>(p) * static_cast<std::int64_t>(p + 1);
}

CurveLevel curve_level(std::uint64_t p) {
  require_prime_at_least_5(p);
  return {p, p * p, static_cast<unsigned>(p % 12), c_of(p), genus(p), volume(p), index(p)};
}

}  // namespace arakx0::modular
