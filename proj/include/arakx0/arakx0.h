#ifndef ARAKX0_ARAKX0_H
#define ARAKX0_ARAKX0_H

/* C interface to arakx0: Eisenstein scattering data, quadratic-form classes,
 * special-fiber intersection calculus and the self-intersection omega^2 for
 * the modular curve X_0(p^2).
 *
 * Every fallible call returns an ax0_status; on failure ax0_last_error()
 * holds a message for the calling thread. Strings returned by accessor
 * functions are owned by the handle they came from and stay valid until it
 * is destroyed. Rationals are written "num/den". */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ARAKX0_BUILDING_LIBRARY)
#    define AX0_API __declspec(dllexport)
#  else
#    define AX0_API __declspec(dllimport)
#  endif
#else
#  define AX0_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  AX0_OK = 0,
  AX0_ERR_INVALID_ARGUMENT = 1,
  AX0_ERR_NOT_PRIME = 2,
  AX0_ERR_DOMAIN = 3,
  AX0_ERR_POLE = 4,
  AX0_ERR_TRUNCATION = 5,
  AX0_ERR_NOT_STABILIZED = 6,
  AX0_ERR_INCONSISTENT = 7,
  AX0_ERR_INTERNAL = 100
} ax0_status;

typedef enum { AX0_PAIR_INF_INF = 0, AX0_PAIR_INF_ZERO = 1 } ax0_cusp_pair;
typedef enum { AX0_MODE_MAIN_TERM = 0, AX0_MODE_CONSTANTS = 1 } ax0_mode;

AX0_API const char* ax0_version(void);
AX0_API const char* ax0_status_string(ax0_status status);
AX0_API const char* ax0_last_error(void);

AX0_API int ax0_is_prime(uint64_t n);

/* ---- level data ---- */

typedef struct {
  uint64_t p;
  uint64_t level;
  int64_t genus;
  int64_t index;
  uint64_t cusp_count;
  double volume;
  int64_t c_num, c_den;
  int64_t s_p; /* (p^2 - 1)/24 */
} ax0_curve_info;

/* Needs p prime, p >= 5. */
AX0_API ax0_status ax0_curve_info_get(uint64_t p, ax0_curve_info* out);

/* ---- Eisenstein data ---- */

AX0_API ax0_status ax0_phi_closed(ax0_cusp_pair pair, double s_re, double s_im, uint64_t p,
                                  double* re, double* im);
/* tolerance <= 0 disables the truncation check */
AX0_API ax0_status ax0_phi_series(ax0_cusp_pair pair, double s, uint64_t p, uint64_t c_max,
                                  double tolerance, double* value, double* tail_bound);
AX0_API ax0_status ax0_scattering_expansion(ax0_cusp_pair pair, uint64_t p, double* pole,
                                            double* constant);
AX0_API ax0_status ax0_constant_a(double* out);

typedef struct {
  double lhs;
  double rhs;
  double residual;
  double tail_bound;
} ax0_es1;

AX0_API ax0_status ax0_verify_es1(double z_re, double z_im, double s, uint64_t p, int64_t box,
                                  ax0_es1* out);
AX0_API ax0_status ax0_L_series(uint64_t M, double s, uint64_t p, double* out);

/* ---- quadratic forms ---- */

AX0_API ax0_status ax0_pell_min(int64_t delta, int64_t* x, int64_t* y);
AX0_API ax0_status ax0_epstein_definite(int64_t a, int64_t b, int64_t c, double s, double* out);
AX0_API ax0_status ax0_residue_epstein(int64_t a, int64_t b, int64_t c, double* out);
AX0_API ax0_status ax0_zeta_level_residue(int64_t l, uint64_t p, double* out);
AX0_API ax0_status ax0_theta_class_weight(int64_t l, uint64_t p, double* out);

typedef struct ax0_class_set ax0_class_set;

AX0_API ax0_status ax0_classes_create(int64_t l, uint64_t p, ax0_class_set** out);
AX0_API void ax0_classes_destroy(ax0_class_set* set);
AX0_API size_t ax0_classes_count(const ax0_class_set* set);
/* "[a,b,c]"; NULL when i is out of range */
AX0_API const char* ax0_classes_form(const ax0_class_set* set, size_t i);
/* log of the fundamental unit (disc > 0), 0 otherwise */
AX0_API double ax0_classes_log_unit(const ax0_class_set* set, size_t i);
/* |Gamma_0(p^2)_Phi| (disc < 0), 0 otherwise */
AX0_API int ax0_classes_stab_order(const ax0_class_set* set, size_t i);

/* ---- special fiber ---- */

typedef struct ax0_fiber ax0_fiber;

/* minimal != 0 contracts down to the minimal model */
AX0_API ax0_status ax0_fiber_create(uint64_t p, int minimal, ax0_fiber** out);
AX0_API void ax0_fiber_destroy(ax0_fiber* f);
AX0_API size_t ax0_fiber_size(const ax0_fiber* f);
AX0_API const char* ax0_fiber_name(const ax0_fiber* f, size_t i);
AX0_API int64_t ax0_fiber_multiplicity(const ax0_fiber* f, size_t i);
AX0_API int64_t ax0_fiber_arith_genus(const ax0_fiber* f, size_t i);
AX0_API const char* ax0_fiber_intersection(const ax0_fiber* f, size_t i, size_t j);
AX0_API const char* ax0_fiber_canonical_degree(const ax0_fiber* f, size_t i);
AX0_API const char* ax0_fiber_adjunction_sum(const ax0_fiber* f);
AX0_API int64_t ax0_fiber_expected_adjunction(const ax0_fiber* f);
/* 1 when symmetric, V.D = 0, kernel = span(V) and adjunction all hold */
AX0_API int ax0_fiber_valid(const ax0_fiber* f);
/* contraction log and composed pullbacks, minimal models only */
AX0_API size_t ax0_fiber_contracted_count(const ax0_fiber* f);
AX0_API const char* ax0_fiber_contracted(const ax0_fiber* f, size_t k);
AX0_API size_t ax0_fiber_basis_size(const ax0_fiber* f);
AX0_API const char* ax0_fiber_basis_name(const ax0_fiber* f, size_t j);
AX0_API const char* ax0_fiber_pullback(const ax0_fiber* f, size_t i, size_t j);

/* ---- omega^2 ---- */

typedef struct {
  uint64_t p;
  ax0_mode mode;
  int64_t g;
  int64_t s_p;
  int64_t algebraic_num, algebraic_den; /* (g^2 - 1)/s_p */
  double algebraic;
  double analytic;
  double total;
  double target;
  double ratio;
  int e_p_vanishes; /* 1 when p = 11 mod 12 */
} ax0_omega;

AX0_API ax0_status ax0_green_estimate(uint64_t p, ax0_mode mode, double* out);
AX0_API ax0_status ax0_omega_sq(uint64_t p, ax0_mode mode, ax0_omega* out);
/* *ok = 1 when <D_m, C'> = 0 exactly for both m and both C' */
AX0_API ax0_status ax0_dm_orthogonal(uint64_t p, int* ok);

typedef struct ax0_scan ax0_scan;

AX0_API ax0_status ax0_scan_create(uint64_t p_min, uint64_t p_max, ax0_mode mode, ax0_scan** out);
AX0_API void ax0_scan_destroy(ax0_scan* scan);
AX0_API size_t ax0_scan_count(const ax0_scan* scan);
AX0_API ax0_status ax0_scan_row(const ax0_scan* scan, size_t i, ax0_omega* out);
AX0_API double ax0_scan_max_residual(const ax0_scan* scan);
AX0_API uint64_t ax0_scan_max_residual_prime(const ax0_scan* scan);
AX0_API int ax0_scan_monotone(const ax0_scan* scan);

/* ---- verification suites ---- */

typedef struct ax0_report ax0_report;

/* suite: "eisenstein", "fiber", "quadforms" or "all"; box <= 0 and
 * precision <= 0 select the defaults */
AX0_API ax0_status ax0_verify(const char* suite, uint64_t p, int64_t box, double precision,
                              ax0_report** out);
AX0_API void ax0_report_destroy(ax0_report* report);
AX0_API size_t ax0_report_count(const ax0_report* report);
AX0_API size_t ax0_report_failures(const ax0_report* report);
AX0_API const char* ax0_report_name(const ax0_report* report, size_t i);
AX0_API int ax0_report_passed(const ax0_report* report, size_t i);
AX0_API double ax0_report_residual(const ax0_report* report, size_t i);
AX0_API double ax0_report_tolerance(const ax0_report* report, size_t i);
AX0_API const char* ax0_report_detail(const ax0_report* report, size_t i);
AX0_API size_t ax0_report_skipped_count(const ax0_report* report);
AX0_API const char* ax0_report_skipped(const ax0_report* report, size_t i);

#ifdef __cplusplus
}
#endif

#endif /* ARAKX0_ARAKX0_H */
