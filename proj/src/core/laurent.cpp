#include "laurent.hpp"

#include <algorithm>

#include "error.hpp"

namespace arakx0::num {

namespace {

// Index of the lowest possibly-nonzero coefficient: -1 with a pole, else 0.
int valuation(const LaurentPiece& x) { return x.pole != 0.0 ? -1 : 0; }

}  // namespace

double LaurentPiece::evaluate(double h) const {
  double v = constant;
  if (pole != 0.0) v += pole / h;
  if (order >= 1) v += linear * h;
  return v;
}

LaurentPiece laurent_mul(const LaurentPiece& x, const LaurentPiece& y) {
  if (x.pole != 0.0 && y.pole != 0.0)
    fail(ErrorCode::Domain, "laurent_mul: product would have a double pole");

  // The coefficient of (s-1)^k needs x_i for i <= k - val(y) and y_j for j <= k - val(x).
  int order = std::min({1, x.order + valuation(y), y.order + valuation(x)});

  LaurentPiece r;
  r.pole = x.pole * y.constant + x.constant * y.pole;
  r.constant = x.pole * y.linear + x.constant * y.constant + x.linear * y.pole;
  r.linear = order >= 1 ? x.constant * y.linear + x.linear * y.constant : 0.0;
  r.order = order;
  if (order < 0) r.constant = 0.0;
  return r;
}

LaurentPiece laurent_add(const LaurentPiece& x, const LaurentPiece& y) {
  int order = std::min(x.order, y.order);
  LaurentPiece r{x.pole + y.pole, x.constant + y.constant, x.linear + y.linear, order};
  if (order < 1) r.linear = 0.0;
  return r;
}

LaurentPiece laurent_scale(const LaurentPiece& x, double factor) {
  return {x.pole * factor, x.constant * factor, x.linear * factor, x.order};
}

LaurentPiece zeta_2sm1_laurent() {
  return {0.5, kEulerGamma, -2.0 * kStieltjes1, 1};
}

}  // namespace arakx0::num
