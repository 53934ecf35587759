#pragma once

#include "special.hpp"

namespace arakx0::num {

// Truncated Laurent expansion at s = 1:
//   pole / (s-1) + constant + linear * (s-1) + O((s-1)^(order+1)).
// `order` is the highest power of (s-1) whose coefficient is exact; a
// coefficient above `order` is stored as 0 and must not be trusted.
struct LaurentPiece {
  double pole = 0.0;
  double constant = 0.0;
  double linear = 0.0;
  int order = 1;

  static LaurentPiece constant_series(double c) { return {0.0, c, 0.0, 1}; }

  // Value of the truncated series at s = 1 + h.
  double evaluate(double h) const;
};

LaurentPiece laurent_mul(const LaurentPiece& x, const LaurentPiece& y);
LaurentPiece laurent_add(const LaurentPiece& x, const LaurentPiece& y);
LaurentPiece laurent_scale(const LaurentPiece& x, double factor);

// zeta(2s-1) = 1/(2(s-1)) + gamma_EM - 2 gamma_1 (s-1) + ...
LaurentPiece zeta_2sm1_laurent();

}  // namespace arakx0::num
