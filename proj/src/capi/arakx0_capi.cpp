#include "arakx0/arakx0.h"

#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "arakelov.hpp"
#include "eisenstein.hpp"
#include "error.hpp"
#include "fiber.hpp"
#include "modular.hpp"
#include "primes.hpp"
#include "quadforms.hpp"
#include "verify.hpp"

using namespace arakx0;

struct ax0_class_set {
  qf::ClassSet set;
  std::vector<std::string> forms;
};

struct ax0_fiber {
  fiber::FiberModel model;
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> inter;
  std::vector<std::string> canonical;
  std::string adjunction;
  std::int64_t expected_adjunction = 0;
  bool valid = false;
  std::vector<std::string> contracted;
  std::vector<std::string> basis;
  std::vector<std::vector<std::string>> pullback;
};

struct ax0_scan {
  ara::ScanResult result;
};

struct ax0_report {
  verify::Report report;
};

namespace {

thread_local std::string g_last_error;

ax0_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return AX0_ERR_INVALID_ARGUMENT;
    case ErrorCode::NotPrime: return AX0_ERR_NOT_PRIME;
    case ErrorCode::Domain: return AX0_ERR_DOMAIN;
    case ErrorCode::Pole: return AX0_ERR_POLE;
    case ErrorCode::Truncation: return AX0_ERR_TRUNCATION;
    case ErrorCode::NotStabilized: return AX0_ERR_NOT_STABILIZED;
    case ErrorCode::Inconsistent: return AX0_ERR_INCONSISTENT;
  }
  return AX0_ERR_INTERNAL;
}

template <typename F>
ax0_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return AX0_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return AX0_ERR_INTERNAL;
}

ax0_status null_output() {
  g_last_error = "null output pointer";
  return AX0_ERR_INVALID_ARGUMENT;
}

eis::CuspPair pair_of(ax0_cusp_pair pair) {
  if (pair == AX0_PAIR_INF_INF) return eis::CuspPair::InfInf;
  if (pair == AX0_PAIR_INF_ZERO) return eis::CuspPair::InfZero;
  fail(ErrorCode::InvalidArgument, "unknown cusp pair");
}

ara::GreenMode mode_of(ax0_mode mode) {
  if (mode == AX0_MODE_MAIN_TERM) return ara::GreenMode::MainTerm;
  if (mode == AX0_MODE_CONSTANTS) return ara::GreenMode::Constants;
  fail(ErrorCode::InvalidArgument, "unknown mode");
}

void fill_omega(const ara::OmegaReport& r, ax0_omega* out) {
  out->p = r.p;
  out->mode = r.mode == ara::GreenMode::MainTerm ? AX0_MODE_MAIN_TERM : AX0_MODE_CONSTANTS;
  out->g = r.g;
  out->s_p = to_i64(r.s_p.get_num());
  out->algebraic_num = to_i64(r.algebraic_coeff.get_num());
  out->algebraic_den = to_i64(r.algebraic_coeff.get_den());
  out->algebraic = r.algebraic;
  out->analytic = r.analytic;
  out->total = r.total;
  out->target = r.target;
  out->ratio = r.ratio;
  out->e_p_vanishes = r.e_p_flag == "0" ? 1 : 0;
}

qf::QuadForm form_of(int64_t a, int64_t b, int64_t c) {
  return {int_from(a), int_from(b), int_from(c), std::nullopt};
}

const char* at(const std::vector<std::string>& v, size_t i) { return i < v.size() ? v[i].c_str() : nullptr; }

}  // namespace

extern "C" {

const char* ax0_version(void) { return "0.3.0"; }

const char* ax0_status_string(ax0_status status) {
  switch (status) {
    case AX0_OK: return "ok";
    case AX0_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AX0_ERR_NOT_PRIME: return "not prime";
    case AX0_ERR_DOMAIN: return "outside the domain";
    case AX0_ERR_POLE: return "pole";
    case AX0_ERR_TRUNCATION: return "truncation bound exceeds tolerance";
    case AX0_ERR_NOT_STABILIZED: return "not stabilized";
    case AX0_ERR_INCONSISTENT: return "inconsistent data";
    case AX0_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ax0_last_error(void) { return g_last_error.c_str(); }

int ax0_is_prime(uint64_t n) { return is_prime(n) ? 1 : 0; }

ax0_status ax0_curve_info_get(uint64_t p, ax0_curve_info* out) {
  if (!out) return null_output();
  return guarded([&] {
    auto lv = modular::curve_level(p);
    out->p = lv.p;
    out->level = lv.level;
    out->genus = lv.genus;
    out->index = lv.index;
    out->cusp_count = modular::cusps(p).size();
    out->volume = lv.volume;
    out->c_num = to_i64(lv.c.get_num());
    out->c_den = to_i64(lv.c.get_den());
    out->s_p = to_i64(ara::s_p(p).get_num());
  });
}

ax0_status ax0_phi_closed(ax0_cusp_pair pair, double s_re, double s_im, uint64_t p, double* re, double* im) {
  if (!re || !im) return null_output();
  return guarded([&] {
    auto v = eis::phi_closed(pair_of(pair), {s_re, s_im}, p);
    *re = v.real();
    *im = v.imag();
  });
}

ax0_status ax0_phi_series(ax0_cusp_pair pair, double s, uint64_t p, uint64_t c_max, double tolerance,
                          double* value, double* tail_bound) {
  if (!value || !tail_bound) return null_output();
  return guarded([&] {
    double tol = tolerance > 0 ? tolerance : eis::kNoTolerance;
    auto r = eis::phi_series(pair_of(pair), s, p, c_max, tol);
    *value = r.value;
    *tail_bound = r.tail_bound;
  });
}

ax0_status ax0_scattering_expansion(ax0_cusp_pair pair, uint64_t p, double* pole, double* constant) {
  if (!pole || !constant) return null_output();
  return guarded([&] {
    auto e = eis::scattering_expansion(pair_of(pair), p);
    *pole = e.piece.pole;
    *constant = e.piece.constant;
  });
}

ax0_status ax0_constant_a(double* out) {
  if (!out) return null_output();
  return guarded([&] { *out = eis::constant_a(); });
}

ax0_status ax0_verify_es1(double z_re, double z_im, double s, uint64_t p, int64_t box, ax0_es1* out) {
  if (!out) return null_output();
  return guarded([&] {
    auto r = eis::verify_es1({z_re, z_im}, s, p, box);
    *out = {r.lhs, r.rhs, r.residual, r.tail_bound};
  });
}

ax0_status ax0_L_series(uint64_t M, double s, uint64_t p, double* out) {
  if (!out) return null_output();
  return guarded([&] { *out = eis::L_series(M, s, p).real(); });
}

ax0_status ax0_pell_min(int64_t delta, int64_t* x, int64_t* y) {
  if (!x || !y) return null_output();
  return guarded([&] {
    auto sol = qf::pell_min(int_from(delta));
    *x = to_i64(sol.x);
    *y = to_i64(sol.y);
  });
}

ax0_status ax0_epstein_definite(int64_t a, int64_t b, int64_t c, double s, double* out) {
  if (!out) return null_output();
  return guarded([&] { *out = qf::epstein_zeta_definite_cs(form_of(a, b, c), s); });
}

ax0_status ax0_residue_epstein(int64_t a, int64_t b, int64_t c, double* out) {
  if (!out) return null_output();
  return guarded([&] { *out = qf::residue_epstein(form_of(a, b, c)); });
}

ax0_status ax0_zeta_level_residue(int64_t l, uint64_t p, double* out) {
  if (!out) return null_output();
  return guarded([&] { *out = qf::zeta_level_residue(l, p); });
}

ax0_status ax0_theta_class_weight(int64_t l, uint64_t p, double* out) {
  if (!out) return null_output();
  return guarded([&] { *out = qf::theta_class_weight(l, p); });
}

ax0_status ax0_classes_create(int64_t l, uint64_t p, ax0_class_set** out) {
  if (!out) return null_output();
  *out = nullptr;
  return guarded([&] {
    auto h = new ax0_class_set{qf::enumerate_classes(l, p), {}};
    for (const auto& cls : h->set.reps) h->forms.push_back(cls.rep.str());
    *out = h;
  });
}

void ax0_classes_destroy(ax0_class_set* set) { delete set; }

size_t ax0_classes_count(const ax0_class_set* set) { return set ? set->set.reps.size() : 0; }

const char* ax0_classes_form(const ax0_class_set* set, size_t i) { return set ? at(set->forms, i) : nullptr; }

double ax0_classes_log_unit(const ax0_class_set* set, size_t i) {
  return set && i < set->set.reps.size() ? set->set.reps[i].log_unit : 0.0;
}

int ax0_classes_stab_order(const ax0_class_set* set, size_t i) {
  return set && i < set->set.reps.size() ? set->set.reps[i].stab_order : 0;
}

ax0_status ax0_fiber_create(uint64_t p, int minimal, ax0_fiber** out) {
  if (!out) return null_output();
  *out = nullptr;
  return guarded([&] {
    auto h = std::make_unique<ax0_fiber>();
    auto base = fiber::edixhoven_fiber(p);
    if (minimal) {
      auto mm = fiber::minimal_model(base);
      h->model = mm.model;
      h->contracted = mm.contracted;
      h->basis = mm.pullback.basis;
      for (const auto& row : mm.pullback.coeffs) {
        std::vector<std::string> r;
        for (const auto& c : row) r.push_back(rat_fraction_str(c));
        h->pullback.push_back(std::move(r));
      }
    } else {
      h->model = base;
    }
    for (const auto& c : h->model.components) h->names.push_back(c.name);
    for (const auto& row : h->model.inter) {
      std::vector<std::string> r;
      for (const auto& v : row) r.push_back(rat_fraction_str(v));
      h->inter.push_back(std::move(r));
    }
    for (const auto& k : fiber::canonical_degrees(h->model)) h->canonical.push_back(rat_fraction_str(k));
    auto chk = fiber::validate(h->model);
    h->adjunction = rat_fraction_str(chk.adjunction_value);
    h->expected_adjunction = chk.expected_adjunction;
    h->valid = chk.ok();
    *out = h.release();
  });
}

void ax0_fiber_destroy(ax0_fiber* f) { delete f; }

size_t ax0_fiber_size(const ax0_fiber* f) { return f ? f->model.size() : 0; }

const char* ax0_fiber_name(const ax0_fiber* f, size_t i) { return f ? at(f->names, i) : nullptr; }

int64_t ax0_fiber_multiplicity(const ax0_fiber* f, size_t i) {
  return f && i < f->model.size() ? f->model.components[i].multiplicity : 0;
}

int64_t ax0_fiber_arith_genus(const ax0_fiber* f, size_t i) {
  return f && i < f->model.size() ? f->model.components[i].arith_genus : 0;
}

const char* ax0_fiber_intersection(const ax0_fiber* f, size_t i, size_t j) {
  return f && i < f->inter.size() ? at(f->inter[i], j) : nullptr;
}

const char* ax0_fiber_canonical_degree(const ax0_fiber* f, size_t i) { return f ? at(f->canonical, i) : nullptr; }

const char* ax0_fiber_adjunction_sum(const ax0_fiber* f) { return f ? f->adjunction.c_str() : nullptr; }

int64_t ax0_fiber_expected_adjunction(const ax0_fiber* f) { return f ? f->expected_adjunction : 0; }

int ax0_fiber_valid(const ax0_fiber* f) { return f && f->valid ? 1 : 0; }

size_t ax0_fiber_contracted_count(const ax0_fiber* f) { return f ? f->contracted.size() : 0; }

const char* ax0_fiber_contracted(const ax0_fiber* f, size_t k) { return f ? at(f->contracted, k) : nullptr; }

size_t ax0_fiber_basis_size(const ax0_fiber* f) { return f ? f->basis.size() : 0; }

const char* ax0_fiber_basis_name(const ax0_fiber* f, size_t j) { return f ? at(f->basis, j) : nullptr; }

const char* ax0_fiber_pullback(const ax0_fiber* f, size_t i, size_t j) {
  return f && i < f->pullback.size() ? at(f->pullback[i], j) : nullptr;
}

ax0_status ax0_green_estimate(uint64_t p, ax0_mode mode, double* out) {
  if (!out) return null_output();
  return guarded([&] { *out = ara::green_estimate(p, mode_of(mode)).value; });
}

ax0_status ax0_omega_sq(uint64_t p, ax0_mode mode, ax0_omega* out) {
  if (!out) return null_output();
  return guarded([&] { fill_omega(ara::omega_sq(p, mode_of(mode)), out); });
}

ax0_status ax0_dm_orthogonal(uint64_t p, int* ok) {
  if (!ok) return null_output();
  return guarded([&] { *ok = ara::check_dm_orthogonal(p).ok ? 1 : 0; });
}

ax0_status ax0_scan_create(uint64_t p_min, uint64_t p_max, ax0_mode mode, ax0_scan** out) {
  if (!out) return null_output();
  *out = nullptr;
  return guarded([&] { *out = new ax0_scan{ara::scan(p_min, p_max, mode_of(mode))}; });
}

void ax0_scan_destroy(ax0_scan* scan) { delete scan; }

size_t ax0_scan_count(const ax0_scan* scan) { return scan ? scan->result.rows.size() : 0; }

ax0_status ax0_scan_row(const ax0_scan* scan, size_t i, ax0_omega* out) {
  if (!out) return null_output();
  return guarded([&] {
    if (!scan || i >= scan->result.rows.size()) fail(ErrorCode::InvalidArgument, "scan row out of range");
    fill_omega(scan->result.rows[i], out);
  });
}

double ax0_scan_max_residual(const ax0_scan* scan) {
  return scan ? scan->result.max_residual : std::numeric_limits<double>::quiet_NaN();
}

uint64_t ax0_scan_max_residual_prime(const ax0_scan* scan) { return scan ? scan->result.max_residual_p : 0; }

int ax0_scan_monotone(const ax0_scan* scan) { return scan && scan->result.monotone ? 1 : 0; }

ax0_status ax0_verify(const char* suite, uint64_t p, int64_t box, double precision, ax0_report** out) {
  if (!out) return null_output();
  *out = nullptr;
  return guarded([&] {
    if (!suite) fail(ErrorCode::InvalidArgument, "null suite name");
    verify::Options opts;
    if (box > 0) opts.box = box;
    if (precision > 0) opts.precision = precision;
    *out = new ax0_report{verify::run(suite, p, opts)};
  });
}

void ax0_report_destroy(ax0_report* report) { delete report; }

size_t ax0_report_count(const ax0_report* report) { return report ? report->report.checks.size() : 0; }

size_t ax0_report_failures(const ax0_report* report) { return report ? report->report.failures() : 0; }

const char* ax0_report_name(const ax0_report* report, size_t i) {
  return report && i < report->report.checks.size() ? report->report.checks[i].name.c_str() : nullptr;
}

int ax0_report_passed(const ax0_report* report, size_t i) {
  return report && i < report->report.checks.size() && report->report.checks[i].passed ? 1 : 0;
}

double ax0_report_residual(const ax0_report* report, size_t i) {
  return report && i < report->report.checks.size() ? report->report.checks[i].residual
                                                     : std::numeric_limits<double>::quiet_NaN();
}

double ax0_report_tolerance(const ax0_report* report, size_t i) {
  return report && i < report->report.checks.size() ? report->report.checks[i].tolerance
                                                     : std::numeric_limits<double>::quiet_NaN();
}

const char* ax0_report_detail(const ax0_report* report, size_t i) {
  return report && i < report->report.checks.size() ? report->report.checks[i].detail.c_str() : nullptr;
}

size_t ax0_report_skipped_count(const ax0_report* report) { return report ? report->report.skipped.size() : 0; }

const char* ax0_report_skipped(const ax0_report* report, size_t i) {
  return report ? at(report->report.skipped, i) : nullptr;
}

}  // extern "C"
