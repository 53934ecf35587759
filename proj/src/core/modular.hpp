#pragma once

// Level bookkeeping for X_0(p^2).

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace arakx0::modular {

struct Cusp {
  // a cusp num/den in lowest terms; infinity is 1/0
  std::int64_t num;
  std::int64_t den;
  std::string label;
};

struct CurveLevel {
  std::uint64_t p;
  std::uint64_t level;    // p^2
  unsigned residue;       // p mod 12
  Rat c;                  // genus correction constant
  std::int64_t genus;
  double volume;          // hyperbolic area of Gamma_0(p^2)
  std::int64_t index;     // [SL_2(Z) : Gamma_0(p^2)]
};

// Genus correction constant c, keyed by p mod 12.
Rat c_of(std::uint64_t p);
std::int64_t genus(std::uint64_t p);
std::vector<Cusp> cusps(std::uint64_t p);
double volume(std::uint64_t p);
std::int64_t index(std::uint64_t p);

// Requires p prime and p >= 5.
CurveLevel curve_level(std::uint64_t p);

}  // namespace arakx0::modular
