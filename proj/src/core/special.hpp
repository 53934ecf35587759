#pragma once

// Special functions at binary64 working precision.
//
// Gamma uses a shifted Stirling series; the Riemann zeta function uses
// Euler-Maclaurin summation with an explicit remainder bound, valid on the
// whole half-plane Re(s) > 0 except at the pole s = 1.

#include <complex>
#include <span>

namespace arakx0::num {

using Cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;
// First Stieltjes constant gamma_1.
inline constexpr double kStieltjes1 = -0.07281584548367672486058637587490131;
// Glaisher-Kinkelin constant A.
inline constexpr double kGlaisher = 1.28242712910062263687534256886979172;

Cplx gamma_fn(Cplx s);
Cplx log_gamma(Cplx s);

Cplx riemann_zeta(Cplx s);
// Riemann zeta together with the Euler-Maclaurin remainder bound used.
struct ZetaEval {
  Cplx value;
  double remainder_bound;
};
ZetaEval riemann_zeta_with_bound(Cplx s);

double digamma(double x);
// zeta'(2) through its closed form in terms of Glaisher's constant.
double zeta_prime_at_2();

// Neumaier compensated summation. Order-dependent only through the inputs'
// order, which callers keep deterministic.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KahanSumC {
 public:
  void add(Cplx x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  Cplx value() const { return {re_.value(), im_.value()}; }

 private:
  KahanSum re_, im_;
};

double kahan_total(std::span<const double> xs);

// Even-index Bernoulli numbers B_2, B_4, ..., B_{2*kBernoulliCount}.
inline constexpr int kBernoulliCount = 16;
double bernoulli_even(int k);  // returns B_{2k}, 1 <= k <= kBernoulliCount

}  // namespace arakx0::num
