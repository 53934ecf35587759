#include "eisenstein.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "error.hpp"
#include "modular.hpp"
#include "primes.hpp"

namespace arakx0::eis {

using num::kEulerGamma;
using num::kPi;

namespace {

// Euler phi for 1..n by a linear sieve.
std::vector<std::uint32_t> phi_table(std::uint64_t n) {
  std::vector<std::uint32_t> phi(n + 1, 0);
  std::vector<std::uint32_t> primes;
  if (n >= 1) phi[1] = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (phi[i] == 0) {
      phi[i] = static_cast<std::uint32_t>(i - 1);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t q : primes) {
      std::uint64_t iq = i * q;
      if (iq > n) break;
      if (i % q == 0) {
        phi[iq] = phi[i] * q;
        break;
      }
      phi[iq] = phi[i] * (q - 1);
    }
  }
  return phi;
}

double gamma_prefactor(double s) {
  return std::sqrt(kPi) * (num::gamma_fn(s - 0.5) / num::gamma_fn(s)).real();
}

void check_tail(double tail, double tolerance, const char* what) {
  if (tail > tolerance)
    fail(ErrorCode::Truncation, std::string(what) + ": tail bound " + std::to_string(tail) +
                                    " exceeds tolerance " + std::to_string(tolerance));
}

double p_squared(std::uint64_t p) { return static_cast<double>(p) * static_cast<double>(p); }

// Smallest eigenvalue of the binary form |p^2 m z + t n|^2 in (m, n).
double lattice_min_eigenvalue(Cplx z, double p2, double t) {
  double a = p2 * p2 * std::norm(z);
  double b = p2 * t * z.real();
  double c = t * t;
  double det = p2 * p2 * t * t * z.imag() * z.imag();
  double lambda_max = 0.5 * (a + c) + std::sqrt(0.25 * (a - c) * (a - c) + b * b);
  return det / lambda_max;
}

// 8 y^s lambda^{-s} sum_{r > box} r^{1-2s}, bounded by the integral from box.
double lattice_tail_bound(Cplx z, double s, double p2, double t, std::int64_t box) {
  double lambda = lattice_min_eigenvalue(z, p2, t);
  double y = z.imag();
  return 8.0 * std::pow(y / lambda, s) * std::pow(static_cast<double>(box), 2.0 - 2.0 * s) /
         (2.0 * s - 2.0);
}

void check_lattice_args(Cplx z, double s, std::int64_t box) {
  if (!(z.imag() > 0.0)) fail(ErrorCode::Domain, "lattice sums need Im(z) > 0");
  if (!(s > 1.0)) fail(ErrorCode::Domain, "lattice sums need s > 1");
  if (box < 1) fail(ErrorCode::InvalidArgument, "box must be >= 1");
}

}  // namespace

const char* cusp_pair_name(CuspPair pair) {
  return pair == CuspPair::InfInf ? "inf,inf" : "inf,0";
}

std::uint64_t kloosterman_zero(CuspPair pair, std::uint64_t c, std::uint64_t p) {
  if (c == 0) fail(ErrorCode::InvalidArgument, "kloosterman_zero needs c >= 1");
  require_prime(p);
  if (pair == CuspPair::InfInf) return c % (p * p) == 0 ? euler_phi(c) : 0;
  if (c % p == 0 && (c / p) % p != 0) return euler_phi(c / p);
  return 0;
}

Truncated<double> phi_series(CuspPair pair, double s, std::uint64_t p, std::uint64_t c_max,
                             double tolerance) {
  if (!(s > 1.0)) fail(ErrorCode::Domain, "phi_series needs s > 1");
  require_prime(p);
  const std::uint64_t p2 = p * p;
  if (c_max < p2) fail(ErrorCode::InvalidArgument, "phi_series needs c_max >= p^2");

  const double pd = static_cast<double>(p);
  const double prefactor = gamma_prefactor(s);
  num::KahanSum sum;
  double tail = 0.0;

  if (pair == CuspPair::InfInf) {
    // c = p^2 k with S = phi(p^2 k)
    const std::uint64_t k_max = c_max / p2;
    auto phi = phi_table(k_max);
    for (std::uint64_t k = k_max; k >= 1; --k) {
      double phi_c = static_cast<double>(phi[k]) * (k % p == 0 ? pd * pd : pd * (pd - 1.0));
      double c = static_cast<double>(p2) * static_cast<double>(k);
      sum.add(phi_c * std::pow(c, -2.0 * s));
    }
    tail = std::pow(pd, 2.0 - 4.0 * s) * std::pow(static_cast<double>(k_max), 2.0 - 2.0 * s) /
           (2.0 * s - 2.0);
  } else {
    // c = p n with p not dividing n, S = phi(n)
    const std::uint64_t n_max = c_max / p;
    auto phi = phi_table(n_max);
    for (std::uint64_t n = n_max; n >= 1; --n) {
      if (n % p == 0) continue;
      double c = pd * static_cast<double>(n);
      sum.add(static_cast<double>(phi[n]) * std::pow(c, -2.0 * s));
    }
    tail = std::pow(pd, -2.0 * s) * std::pow(static_cast<double>(n_max), 2.0 - 2.0 * s) /
           (2.0 * s - 2.0);
  }

  Truncated<double> out{prefactor * sum.value(), std::abs(prefactor) * tail};
  check_tail(out.tail_bound, tolerance, "phi_series");
  return out;
}

Cplx gamma_zeta_factor(Cplx s) {
  return std::sqrt(kPi) * num::gamma_fn(s - 0.5) / (num::gamma_fn(s) * num::riemann_zeta(2.0 * s));
}

Cplx phi_closed(CuspPair pair, Cplx s, std::uint64_t p) {
  require_prime(p);
  if (s == Cplx(1.0, 0.0)) fail(ErrorCode::Pole, "phi has a pole at s = 1");
  if (!(s.real() > 0.5)) fail(ErrorCode::Domain, "phi_closed is evaluated on Re(s) > 1/2");
  const double pd = static_cast<double>(p);
  const Cplx p2s = std::exp(2.0 * s * std::log(pd));
  const Cplx denom = p2s * (p2s - 1.0);
  if (std::abs(p2s - 1.0) == 0.0) fail(ErrorCode::Pole, "p^{2s} = 1");
  Cplx value = pd * (pd - 1.0) / denom * gamma_zeta_factor(s) * num::riemann_zeta(2.0 * s - 1.0);
  if (pair == CuspPair::InfZero) value *= (p2s - pd) / (pd * (pd - 1.0));
  return value;
}

double constant_a() {
  const double zeta2 = kPi * kPi / 6.0;
  return 6.0 / kPi * (-2.0 * num::kLn2 - 2.0 * num::zeta_prime_at_2() / zeta2);
}

ScatteringExpansion scattering_expansion(CuspPair pair, std::uint64_t p) {
  require_prime(p);
  if (p < 5) fail(ErrorCode::InvalidArgument, "scattering_expansion needs p >= 5");
  const double v = modular::volume(p);
  const double p2 = p_squared(p);
  const double log_p2 = std::log(p2);
  const double pd = static_cast<double>(p);
  const double base = 2.0 * kEulerGamma + constant_a() * kPi / 6.0;
  const double log_coeff =
      pair == CuspPair::InfInf ? (2.0 * p2 - 1.0) / (p2 - 1.0) : (p2 - pd - 1.0) / (p2 - 1.0);
  LaurentPiece piece{1.0 / v, (base - log_coeff * log_p2) / v, 0.0, 0};
  return {pair, p, piece};
}

ScatteringExpansion scattering_expansion_by_product(CuspPair pair, std::uint64_t p) {
  require_prime(p);
  if (p < 5) fail(ErrorCode::InvalidArgument, "scattering_expansion needs p >= 5");
  const double p2 = p_squared(p);
  const double pd = static_cast<double>(p);
  const double log_p2 = std::log(p2);

  // 1/(p^{2s}(p^{2s}-1)) around s = 1
  LaurentPiece power_factor{0.0, 1.0 / (p2 * (p2 - 1.0)),
                            -(2.0 * p2 - 1.0) * log_p2 / (p2 * (p2 - 1.0) * (p2 - 1.0)), 1};
  LaurentPiece gamma_factor{0.0, 6.0 / kPi, constant_a(), 1};
  LaurentPiece piece = num::laurent_mul(num::laurent_mul(power_factor, gamma_factor),
                                        num::zeta_2sm1_laurent());
  piece = num::laurent_scale(piece, pd * (pd - 1.0));
  if (pair == CuspPair::InfZero) {
    // (p^{2s} - p) / (p(p-1))
    LaurentPiece shift{0.0, (p2 - pd) / (pd * (pd - 1.0)), p2 * log_p2 / (pd * (pd - 1.0)), 1};
    piece = num::laurent_mul(piece, shift);
  }
  return {pair, p, piece};
}

Truncated<double> lattice_sum(Cplx z, double s, std::uint64_t p, std::uint64_t t, std::int64_t box,
                              double tolerance) {
  check_lattice_args(z, s, box);
  if (t != 1 && t != p) fail(ErrorCode::InvalidArgument, "lattice_sum needs t in {1, p}");
  const double p2 = p_squared(p);
  const double td = static_cast<double>(t);
  const double x = z.real();
  const double y = z.imag();

  // Half plane {m > 0} u {m = 0, n > 0}; the other half is its negative.
  num::KahanSum half;
  for (std::int64_t m = box; m >= 1; --m) {
    const double re0 = p2 * static_cast<double>(m) * x;
    const double im = p2 * static_cast<double>(m) * y;
    for (std::int64_t n = -box; n <= box; ++n) {
      const double re = re0 + td * static_cast<double>(n);
      half.add(std::pow(y / (re * re + im * im), s));
    }
  }
  for (std::int64_t n = box; n >= 1; --n) {
    const double re = td * static_cast<double>(n);
    half.add(std::pow(y / (re * re), s));
  }

  Truncated<double> out{2.0 * half.value(), lattice_tail_bound(z, s, p2, td, box)};
  check_tail(out.tail_bound, tolerance, "lattice_sum");
  return out;
}

Es1Check verify_es1(Cplx z, double s, std::uint64_t p, std::int64_t box, double tolerance) {
  check_lattice_args(z, s, box);
  require_prime(p);
  const double p2 = p_squared(p);
  const std::int64_t p2i = static_cast<std::int64_t>(p * p);
  const double x = z.real();
  const double y = z.imag();

  // Left side: coprime (m, n) with m = p^2 m'; (m, n) and (-m, -n) both appear,
  // so the halved sum is the half-plane sum.
  num::KahanSum lhs;
  for (std::int64_t mp = box; mp >= 1; --mp) {
    const double re0 = p2 * static_cast<double>(mp) * x;
    const double im = p2 * static_cast<double>(mp) * y;
    for (std::int64_t n = -box; n <= box; ++n) {
      if (std::gcd(p2i * mp, n) != 1) continue;
      const double re = re0 + static_cast<double>(n);
      lhs.add(std::pow(y / (re * re + im * im), s));
    }
  }
  lhs.add(std::pow(y, s));  // m = 0, n = 1

  auto with_t1 = lattice_sum(z, s, p, 1, box);
  auto with_tp = lattice_sum(z, s, p, p, box);
  const double zeta2s = num::riemann_zeta(Cplx(2.0 * s, 0.0)).real();
  const double factor = 0.5 / (zeta2s * (1.0 - std::pow(static_cast<double>(p), -2.0 * s)));
  const double rhs = factor * (with_t1.value - with_tp.value);

  Es1Check out;
  out.lhs = lhs.value();
  out.rhs = rhs;
  out.residual = std::abs(out.lhs - out.rhs);
  out.tail_bound = 0.5 * lattice_tail_bound(z, s, p2, 1.0, box) +
                   factor * (with_t1.tail_bound + with_tp.tail_bound);
  check_tail(out.tail_bound, tolerance, "verify_es1");
  return out;
}

Cplx L_series(std::uint64_t M, Cplx s, std::uint64_t p) {
  require_prime(p);
  if (M != 1 && M != p) fail(ErrorCode::InvalidArgument, "L_series needs M in {1, p}");
  if (!(s.real() > 1.0)) fail(ErrorCode::Domain, "L_series needs Re(s) > 1");
  Cplx l1 = num::riemann_zeta(2.0 * s - 1.0) / num::riemann_zeta(2.0 * s);
  if (M == 1) return l1;
  const double pd = static_cast<double>(p);
  return (pd - 1.0) / (std::exp(2.0 * s * std::log(pd)) - 1.0) * l1;
}

}  // namespace arakx0::eis
