#pragma once

// Weight-zero Eisenstein data for Gamma_0(p^2) at the cusps infinity and 0:
// Kloosterman sums S(0,0;c), scattering functions phi_{P,Q}(s), their Laurent
// data at s = 1, the lattice-sum form of E_{infinity,0}, and the parabolic
// Dirichlet series L_M(s).

#include <cstdint>
#include <limits>

#include "laurent.hpp"
#include "special.hpp"

namespace arakx0::eis {

using num::Cplx;
using num::LaurentPiece;

enum class CuspPair { InfInf, InfZero };

const char* cusp_pair_name(CuspPair pair);

// A truncated infinite sum with a rigorous bound on everything left out.
template <typename T>
struct Truncated {
  T value;
  double tail_bound;
};

struct ScatteringExpansion {
  CuspPair pair;
  std::uint64_t p;
  LaurentPiece piece;
};

inline constexpr double kNoTolerance = std::numeric_limits<double>::infinity();

std::uint64_t kloosterman_zero(CuspPair pair, std::uint64_t c, std::uint64_t p);

// sqrt(pi) Gamma(s-1/2)/Gamma(s) * sum_{c <= c_max} c^{-2s} S(0,0;c).
// Throws ErrorCode::Truncation when the tail bound exceeds `tolerance`.
Truncated<double> phi_series(CuspPair pair, double s, std::uint64_t p, std::uint64_t c_max,
                             double tolerance = kNoTolerance);

Cplx phi_closed(CuspPair pair, Cplx s, std::uint64_t p);

// sqrt(pi) Gamma(s-1/2) / (Gamma(s) zeta(2s)); equals 6/pi at s = 1.
Cplx gamma_zeta_factor(Cplx s);

// Derivative of gamma_zeta_factor at s = 1.
double constant_a();

// Closed-form Laurent data (pole 1/v, constant term); linear term not tracked.
ScatteringExpansion scattering_expansion(CuspPair pair, std::uint64_t p);

// The same expansion assembled by multiplying the Taylor/Laurent pieces of
// the individual factors of phi_closed.
ScatteringExpansion scattering_expansion_by_product(CuspPair pair, std::uint64_t p);

// sum' over 0 < max(|m|,|n|) <= box of y^s / |p^2 m z + t n|^{2s}.
Truncated<double> lattice_sum(Cplx z, double s, std::uint64_t p, std::uint64_t t, std::int64_t box,
                              double tolerance = kNoTolerance);

struct Es1Check {
  double lhs;         // (1/2) sum over coprime (m, n), p^2 | m
  double rhs;         // lattice-sum side
  double residual;    // |lhs - rhs|
  double tail_bound;  // combined truncation budget of both sides
};

Es1Check verify_es1(Cplx z, double s, std::uint64_t p, std::int64_t box,
                    double tolerance = kNoTolerance);

// L_1(s) = zeta(2s-1)/zeta(2s);  L_p(s) = (p-1)/(p^{2s}-1) L_1(s).
Cplx L_series(std::uint64_t M, Cplx s, std::uint64_t p);

}  // namespace arakx0::eis
