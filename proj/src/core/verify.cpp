#include "verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "arakelov.hpp"
#include "error.hpp"
#include "fiber.hpp"
#include "modular.hpp"
#include "primes.hpp"
#include "quadforms.hpp"

namespace arakx0::verify {

namespace {

Check numeric(std::string name, double residual, double tolerance, std::string detail = {}) {
  Check c{std::move(name), residual <= tolerance, residual, tolerance, std::move(detail)};
  if (!std::isfinite(residual)) c.passed = false;
  return c;
}

Check exact(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, passed ? 0.0 : 1.0, 0.0, std::move(detail)};
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Limit of an even function of h at h = 0 from h0, h0/2, ...
double richardson_even(const std::function<double(double)>& f, double h0, int levels) {
  std::vector<std::vector<double>> t(levels);
  double h = h0;
  for (int i = 0; i < levels; ++i, h /= 2.0) {
    t[i].push_back(f(h));
    double factor = 4.0;
    for (int j = 1; j <= i; ++j, factor *= 4.0) t[i].push_back(t[i][j - 1] + (t[i][j - 1] - t[i - 1][j - 1]) / (factor - 1.0));
  }
  return t[levels - 1][levels - 1];
}

double phi_real(eis::CuspPair pair, double s, std::uint64_t p) { return eis::phi_closed(pair, s, p).real(); }

void eisenstein_suite(std::uint64_t p, const Options& opts, Report& r) {
  auto es1 = eis::verify_es1({0.0, 1.0}, 3.0, p, opts.box);
  r.checks.push_back(numeric("es1_identity", es1.residual, opts.precision,
                             "lhs " + sci(es1.lhs) + ", tail bound " + sci(es1.tail_bound)));
  r.checks.push_back(numeric("es1_truncation_certified", es1.tail_bound, opts.precision));

  if (p >= 5) {
    const double v = modular::volume(p);
    for (auto pair : {eis::CuspPair::InfInf, eis::CuspPair::InfZero}) {
      std::string tag = pair == eis::CuspPair::InfInf ? "inf_inf" : "inf_0";
      auto sym = eis::scattering_expansion(pair, p).piece;
      auto prod = eis::scattering_expansion_by_product(pair, p).piece;
      r.checks.push_back(numeric("phi_residue_" + tag, std::abs(extrapolated_phi_residue(pair, p) - 1.0 / v), 1e-8));
      r.checks.push_back(numeric("phi_constant_" + tag, std::abs(extrapolated_phi_constant(pair, p) - sym.constant), 1e-6));
      r.checks.push_back(numeric("phi_constant_by_product_" + tag, std::abs(prod.constant - sym.constant), 1e-12));
      auto series = eis::phi_series(pair, 2.0, p, 200000);
      r.checks.push_back(numeric("phi_series_" + tag, std::abs(series.value - phi_real(pair, 2.0, p)),
                                 series.tail_bound + 1e-13));
    }
  }

  for (double s : {1.3, 1.7, 2.5}) {
    auto l1 = eis::L_series(1, s, p).real();
    auto lp = eis::L_series(p, s, p).real();
    double pd = static_cast<double>(p);
    double rhs = (std::pow(pd, 2.0 * s) - 1.0) / (pd - 1.0) * lp;
    r.checks.push_back(numeric("parabolic_identity_s" + std::to_string(s).substr(0, 3), rel(l1, rhs), 1e-12));
  }
}

std::vector<Rat> expected_pullback_c02(std::uint64_t p) {
  auto v = fiber::expected_pullback_c20(p);
  std::swap(v[0], v[1]);
  return v;
}

void fiber_suite(std::uint64_t p, Report& r) {
  auto f = fiber::edixhoven_fiber(p);
  auto chk = fiber::validate(f);
  r.checks.push_back(exact("table_symmetric", chk.symmetric));
  r.checks.push_back(exact("fiber_relation", chk.fiber_relation));
  r.checks.push_back(exact("kernel_spanned_by_multiplicities", chk.kernel_spanned));
  r.checks.push_back(exact("adjunction_sum", chk.adjunction,
                           "sum " + rat_str(chk.adjunction_value) + ", 2g-2 = " + std::to_string(chk.expected_adjunction)));

  auto mu = fiber::derive_multiplicities(f.inter);
  bool mult_ok = true;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (mu[i] != Rat(int_from(f.components[i].multiplicity))) mult_ok = false;
  r.checks.push_back(exact("multiplicities_from_kernel", mult_ok));

  auto mm = fiber::minimal_model(f);
  Rat s = ara::s_p(p);
  const auto& m = mm.model.inter;
  r.checks.push_back(exact("minimal_two_components", mm.model.size() == 2));
  r.checks.push_back(exact("minimal_matrix", m[0][0] == -s && m[1][1] == -s && m[0][1] == s && m[1][0] == s,
                           "off-diagonal " + rat_str(m[0][1])));
  r.checks.push_back(exact("minimal_adjunction", fiber::validate(mm.model).ok()));
  r.checks.push_back(exact("pullback_formulas", mm.pullback.coeffs[0] == fiber::expected_pullback_c20(p) &&
                                                    mm.pullback.coeffs[1] == expected_pullback_c02(p)));
  r.checks.push_back(exact("pullback_orthogonal", fiber::pullbacks_orthogonal(f, mm)));
  if (p >= 11) r.checks.push_back(exact("dm_orthogonal", ara::check_dm_orthogonal(p).ok));
}

qf::UnimodularMatrix random_gamma0(std::mt19937_64& rng, std::uint64_t N) {
  std::uniform_int_distribution<long> small(-3, 3);
  qf::UnimodularMatrix g = qf::UnimodularMatrix::identity();
  for (int i = 0; i < 3; ++i) {
    g = g * qf::UnimodularMatrix{1, small(rng), 0, 1};
    g = g * qf::UnimodularMatrix{1, 0, int_from(N) * small(rng), 1};
  }
  return g;
}

void quadforms_suite(std::uint64_t p, Report& r) {
  const int chi4 = legendre(-1, p), chi3 = legendre(-3, p);
  for (long l : {0L, 1L, -1L}) {
    auto set = qf::enumerate_classes(l, p);
    std::size_t expected = static_cast<std::size_t>(1 + (l == 0 ? chi4 : chi3));
    r.checks.push_back(exact("class_count_l" + std::to_string(l), set.reps.size() == expected,
                             std::to_string(set.reps.size()) + " classes, Legendre oracle " + std::to_string(expected)));
  }

  for (long d : {5L, 12L, 21L}) {
    auto sol = qf::pell_min(Int(d));
    long bx = 0, by = 0;
    for (long y = 1; bx == 0; ++y) {
      long x2 = 4 + d * y * y;
      long x = std::lround(std::sqrt(static_cast<double>(x2)));
      if (x * x == x2) bx = x, by = y;
    }
    r.checks.push_back(exact("pell_" + std::to_string(d), sol.x == bx && sol.y == by));
  }

  auto unit = qf::make_form(1, 0, 1);
  double cs = qf::epstein_zeta_definite_cs(unit, 2.0);
  auto box = qf::epstein_zeta_definite(unit, 2.0, 400);
  r.checks.push_back(numeric("epstein_box_vs_chowla_selberg", std::abs(cs - box.value), box.tail_bound + 1e-12));
  r.checks.push_back(numeric("epstein_residue", std::abs(qf::residue_epstein(unit) - num::kPi / 4.0), 1e-15));

  std::mt19937_64 rng(p);
  bool stab_ok = true, classify_ok = true, residues_ok = true;
  double worst = 0.0;
  for (long l : {0L, 1L, -1L, 3L, 4L, 5L, 6L, 7L, 8L}) {
    auto set = qf::enumerate_classes(l, p);
    for (std::size_t k = 0; k < set.reps.size(); ++k) {
      const auto& cls = set.reps[k];
      if (cls.stabilizer) {
        if (!qf::transform(cls.rep, *cls.stabilizer).same_coefficients(cls.rep)) stab_ok = false;
        if (cls.stabilizer->z % Int(std::to_string(set.N)) != 0) stab_ok = false;
      }
      auto moved = qf::transform(cls.rep, random_gamma0(rng, set.N));
      if (qf::classify(set, moved) != k || qf::classify(set, cls.rep) != k) classify_ok = false;
    }
    double a = qf::zeta_level_residue(l, p), b = qf::zeta_level_residue_by_definition(l, p);
    worst = std::max(worst, std::abs(a - b));
    if (std::abs(a - b) > 1e-12 * std::max(1.0, std::abs(a))) residues_ok = false;
  }
  r.checks.push_back(exact("stabilizers_fix_representatives", stab_ok));
  r.checks.push_back(exact("classification_invariant", classify_ok));
  r.checks.push_back(numeric("level_residue_two_routes", residues_ok ? worst : std::max(worst, 1.0), 1e-12));
}

}  // namespace

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.passed) ++n;
  return n;
}

double extrapolated_phi_residue(eis::CuspPair pair, std::uint64_t p) {
  // h phi(1+h) is analytic; its even part has the same value at 0
  return richardson_even([&](double h) { return 0.5 * h * (phi_real(pair, 1.0 + h, p) - phi_real(pair, 1.0 - h, p)); },
                         0.1, 5);
}

double extrapolated_phi_constant(eis::CuspPair pair, std::uint64_t p) {
  return richardson_even([&](double h) { return 0.5 * (phi_real(pair, 1.0 + h, p) + phi_real(pair, 1.0 - h, p)); },
                         0.1, 5);
}

Report run(const std::string& suite, std::uint64_t p, const Options& opts) {
  if (suite != "eisenstein" && suite != "fiber" && suite != "quadforms" && suite != "all")
    fail(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
  require_prime(p);
  Report r;
  r.suite = suite;
  r.p = p;
  const bool all = suite == "all";

  if (suite == "eisenstein" || all) eisenstein_suite(p, opts, r);
  if (suite == "fiber" || all) {
    if (p >= 7)
      fiber_suite(p, r);
    else if (all)
      r.skipped.push_back("fiber");
    else
      fail(ErrorCode::InvalidArgument, "the fiber suite needs p >= 7");
  }
  if (suite == "quadforms" || all) {
    if (p >= 5)
      quadforms_suite(p, r);
    else if (all)
      r.skipped.push_back("quadforms");
    else
      fail(ErrorCode::InvalidArgument, "the quadforms suite needs p >= 5");
  }
  return r;
}

}  // namespace arakx0::verify
