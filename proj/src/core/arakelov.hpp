#pragma once

// Assembly of the Arakelov self-intersection omega^2 of X_0(p^2).

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace arakx0::ara {

Rat s_p(std::uint64_t p);

// Local intersections of D_m = K - (2g-2) H_m + V_m with the two components
// C'_0, C'_inf of the minimal fiber (log p factored out). `perturbation` is
// added to the coefficient of V_m, for negative controls.
struct DmWitness {
  std::uint64_t p = 0;
  std::int64_t genus = 0;
  Rat s_p;
  Rat k_c0, k_cinf;  // K.C'_0, K.C'_inf from the minimal model
  Rat v_coeff;       // V_m = v_coeff * C'_m
  Rat d[2][2];       // d[m][n] = D_m . C'_n
  bool ok = false;
};

DmWitness check_dm_orthogonal(std::uint64_t p, const Rat& perturbation = Rat(0));

enum class GreenMode { MainTerm, Constants };

const char* mode_name(GreenMode mode);
GreenMode parse_mode(const std::string& name);

struct GreenEstimate {
  std::uint64_t p;
  GreenMode mode;
  double value;
  std::string remainder_class;
};

GreenEstimate green_estimate(std::uint64_t p, GreenMode mode);

// constants - main_term written out in closed form.
double green_symbolic_difference(std::uint64_t p);

struct OmegaReport {
  std::uint64_t p;
  GreenMode mode;
  std::int64_t g;
  Rat s_p;
  Rat algebraic_coeff;  // (g^2 - 1)/s_p, the coefficient of log p
  double algebraic;
  double analytic;
  double total;
  double target;
  double ratio;
  std::string e_p_flag;
};

OmegaReport omega_sq(std::uint64_t p, GreenMode mode);

struct ScanResult {
  std::vector<OmegaReport> rows;
  double max_residual = 0.0;  // max |ratio - 1|
  std::uint64_t max_residual_p = 0;
  double last_residual = 0.0;
  bool monotone = false;      // |ratio - 1| non-increasing along the rows
};

ScanResult scan(std::uint64_t p_min, std::uint64_t p_max, GreenMode mode);

}  // namespace arakx0::ara
