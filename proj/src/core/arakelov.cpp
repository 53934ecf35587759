#include "arakelov.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "eisenstein.hpp"
#include "error.hpp"
#include "fiber.hpp"
#include "modular.hpp"
#include "primes.hpp"

namespace arakx0::ara {

namespace {

void require_arakelov_prime(std::uint64_t p) {
  require_prime(p);
  if (p < 11) fail(ErrorCode::Domain, "genus of X_0(" + std::to_string(p) + "^2) is at most 1");
}

}  // namespace

Rat s_p(std::uint64_t p) {
  require_prime(p);
  if (p < 5) fail(ErrorCode::InvalidArgument, "s_p needs p >= 5");
  Int P = int_from(p);
  return make_rat(P * P - 1, Int(24));
}

DmWitness check_dm_orthogonal(std::uint64_t p, const Rat& perturbation) {
  require_arakelov_prime(p);
  DmWitness w;
  w.p = p;
  w.genus = modular::genus(p);
  w.s_p = s_p(p);

  fiber::MinimalModel mm = fiber::minimal_model(fiber::edixhoven_fiber(p));
  const fiber::RatMatrix& inter = mm.model.inter;
  auto k = fiber::canonical_degrees(mm.model);
  w.k_c0 = k[0];
  w.k_cinf = k[1];

  const Rat g1(int_from(w.genus - 1));
  w.v_coeff = -g1 / w.s_p + perturbation;
  bool ok = w.k_c0 == g1 && w.k_cinf == g1;
  for (int m = 0; m < 2; ++m) {
    for (int n = 0; n < 2; ++n) {
      Rat h = m == n ? Rat(1) : Rat(0);  // H_m meets only C'_m, transversally
      w.d[m][n] = k[n] - 2 * g1 * h + w.v_coeff * inter[m][n];
      if (w.d[m][n] != 0) ok = false;
    }
  }
  w.ok = ok;
  return w;
}

const char* mode_name(GreenMode mode) { return mode == GreenMode::MainTerm ? "main_term" : "constants"; }

GreenMode parse_mode(const std::string& name) {
  if (name == "main_term") return GreenMode::MainTerm;
  if (name == "constants") return GreenMode::Constants;
  fail(ErrorCode::InvalidArgument, "unknown mode '" + name + "' (main_term or constants)");
}

GreenEstimate green_estimate(std::uint64_t p, GreenMode mode) {
  require_arakelov_prime(p);
  const double pd = static_cast<double>(p);
  double value;
  if (mode == GreenMode::MainTerm) {
    value = 6.0 * std::log(pd * pd) / (pd * (pd + 1.0));
  } else {
    value = -2.0 * num::kPi * eis::scattering_expansion(eis::CuspPair::InfZero, p).piece.constant;
  }
  return {p, mode, value, "o(log(p^2)/g)"};
}

double green_symbolic_difference(std::uint64_t p) {
  require_arakelov_prime(p);
  const double pd = static_cast<double>(p);
  const double p2 = pd * pd;
  const double v = modular::volume(p);
  const double main = 6.0 * std::log(p2) / (pd * (pd + 1.0));
  return -2.0 * num::kPi / v * (2.0 * num::kEulerGamma + eis::constant_a() * num::kPi / 6.0) -
         main * pd / (p2 - 1.0);
}

OmegaReport omega_sq(std::uint64_t p, GreenMode mode) {
  require_arakelov_prime(p);
  OmegaReport r;
  r.p = p;
  r.mode = mode;
  r.g = modular::genus(p);
  r.s_p = s_p(p);
  const Int g = int_from(r.g);
  r.algebraic_coeff = Rat(g * g - 1) / r.s_p;
  r.algebraic_coeff.canonicalize();

  const double gd = static_cast<double>(r.g);
  const double log_p = std::log(static_cast<double>(p));
  r.algebraic = to_double(r.algebraic_coeff) * log_p;
  r.analytic = 4.0 * gd * (gd - 1.0) * green_estimate(p, mode).value;
  r.total = r.algebraic + r.analytic;
  r.target = 3.0 * gd * 2.0 * log_p;
  r.ratio = r.total / r.target;
  r.e_p_flag = p % 12 == 11 ? "0" : "O(log p)";
  return r;
}

ScanResult scan(std::uint64_t p_min, std::uint64_t p_max, GreenMode mode) {
  if (p_min < 11) fail(ErrorCode::InvalidArgument, "scan needs pmin >= 11");
  if (p_max < p_min) fail(ErrorCode::InvalidArgument, "scan range is empty");
  auto primes = primes_between(p_min, p_max);
  if (primes.empty()) fail(ErrorCode::InvalidArgument, "no primes in the scan range");

  ScanResult out;
  out.rows.resize(primes.size());
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), (primes.size() + 63) / 64);
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < primes.size(); i += workers) out.rows[i] = omega_sq(primes[i], mode);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  out.monotone = true;
  double prev = 0.0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    double res = std::abs(out.rows[i].ratio - 1.0);
    if (res > out.max_residual || i == 0) {
      out.max_residual = res;
      out.max_residual_p = primes[i];
    }
    if (i > 0 && res > prev) out.monotone = false;
    prev = res;
  }
  out.last_residual = prev;
  return out;
}

}  // namespace arakx0::ara
