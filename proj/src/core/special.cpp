#include "special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "error.hpp"

namespace arakx0::num {

namespace {

constexpr std::array<double, kBernoulliCount> kBernoulli = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178032973640561764;

bool is_nonpositive_integer(Cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && std::floor(s.real()) == s.real();
}

void require_finite(Cplx v, const char* what) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    fail(ErrorCode::Domain, std::string(what) + ": non-finite result");
}

// Stirling series for log Gamma, accurate to ~1e-20 once Re(z) >= 15.
Cplx stirling_log_gamma(Cplx z) {
  Cplx inv = 1.0 / z;
  Cplx inv2 = inv * inv;
  Cplx series = 0.0;
  Cplx power = inv;
  for (int k = 1; k <= 8; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + series;
}

constexpr double kStirlingShift = 15.0;

}  // namespace

double bernoulli_even(int k) {
  if (k < 1 || k > kBernoulliCount) fail(ErrorCode::Domain, "Bernoulli index out of range");
  return kBernoulli[k - 1];
}

Cplx log_gamma(Cplx s) {
  if (is_nonpositive_integer(s)) fail(ErrorCode::Pole, "Gamma has a pole at non-positive integers");
  if (s.real() < 0.5) {
    // reflection; the branch of log is irrelevant for exp()
    return std::log(kPi / std::sin(kPi * s)) - log_gamma(1.0 - s);
  }
  Cplx z = s;
  Cplx product = 1.0;
  while (z.real() < kStirlingShift) {
    product *= z;
    z += 1.0;
  }
  return stirling_log_gamma(z) - std::log(product);
}

Cplx gamma_fn(Cplx s) {
  if (is_nonpositive_integer(s)) fail(ErrorCode::Pole, "Gamma has a pole at non-positive integers");
  if (s.real() < 0.5) {
    Cplx v = kPi / (std::sin(kPi * s) * gamma_fn(1.0 - s));
    require_finite(v, "gamma_fn");
    return v;
  }
  Cplx z = s;
  Cplx product = 1.0;
  while (z.real() < kStirlingShift) {
    product *= z;
    z += 1.0;
  }
  Cplx v = std::exp(stirling_log_gamma(z)) / product;
  require_finite(v, "gamma_fn");
  return v;
}

ZetaEval riemann_zeta_with_bound(Cplx s) {
  if (s == Cplx(1.0, 0.0)) fail(ErrorCode::Pole, "riemann_zeta has a pole at s = 1");
  if (s.real() <= 0.0) fail(ErrorCode::Domain, "riemann_zeta is only continued to Re(s) > 0");

  const int n_cut = 30 + static_cast<int>(std::ceil(std::abs(s.imag())));
  constexpr int k_terms = kBernoulliCount - 1;
  const double log_n = std::log(static_cast<double>(n_cut));

  KahanSumC head;
  for (int n = n_cut - 1; n >= 1; --n) head.add(std::exp(-s * std::log(static_cast<double>(n))));

  Cplx n_pow = std::exp(-s * log_n);  // N^{-s}
  Cplx tail = n_pow * static_cast<double>(n_cut) / (s - 1.0) + 0.5 * n_pow;

  // Euler-Maclaurin corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) N^{-s-2k+1}
  Cplx rising = s;               // s(s+1)...(s+2k-2)
  Cplx n_term = n_pow / static_cast<double>(n_cut);  // N^{-s-1}
  double factorial = 2.0;        // (2k)!
  KahanSumC corr;
  for (int k = 1; k <= k_terms; ++k) {
    corr.add(kBernoulli[k - 1] / factorial * rising * n_term);
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    n_term /= static_cast<double>(n_cut) * n_cut;
    factorial *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
  }
  // Remainder: |s(s+1)...(s+2K+1) B_{2K+2} N^{-s-2K-1}| / ((2K+2)! (Re s + 2K + 1))
  double bound = std::abs(rising * (s + (2.0 * k_terms + 1.0))) * std::abs(kBernoulli[k_terms]) /
                 factorial * std::abs(n_term) / (s.real() + 2.0 * k_terms + 1.0);

  Cplx value = head.value() + tail + corr.value();
  require_finite(value, "riemann_zeta");
  return {value, bound};
}

Cplx riemann_zeta(Cplx s) { return riemann_zeta_with_bound(s).value; }

double digamma(double x) {
  if (!(x > 0.0)) fail(ErrorCode::Domain, "digamma requires x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift += 1.0 / x;
    x += 1.0;
  }
  double inv2 = 1.0 / (x * x);
  double power = inv2;
  double series = 0.0;
  for (int k = 1; k <= 8; ++k) {
    series += kBernoulli[k - 1] / (2.0 * k) * power;
    power *= inv2;
  }
  return std::log(x) - 0.5 / x - series - shift;
}

double zeta_prime_at_2() {
  return kPi * kPi / 6.0 * (kEulerGamma + std::log(2.0 * kPi) - 12.0 * std::log(kGlaisher));
}

double kahan_total(std::span<const double> xs) {
  KahanSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

}  // namespace arakx0::num
