#pragma once

// Invariant suites run by `verify`: each check carries its residual and the
// tolerance it was held to.

#include <cstdint>
#include <string>
#include <vector>

#include "eisenstein.hpp"

namespace arakx0::verify {

struct Check {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct Report {
  std::string suite;
  std::uint64_t p = 0;
  std::vector<Check> checks;
  std::vector<std::string> skipped;  // suites not applicable at this prime

  bool ok() const;
  std::size_t failures() const;
};

struct Options {
  std::int64_t box = 300;    // lattice box for the Eisenstein identity
  double precision = 1e-6;   // tolerance for the Eisenstein identity
};

// suite in {eisenstein, fiber, quadforms, all}
Report run(const std::string& suite, std::uint64_t p, const Options& opts = {});

// Richardson-extrapolated (s-1) phi(s) and constant term at s = 1.
double extrapolated_phi_residue(eis::CuspPair pair, std::uint64_t p);
double extrapolated_phi_constant(eis::CuspPair pair, std::uint64_t p);

}  // namespace arakx0::verify
