/* Exercises the shared library through its C header only. */

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "arakx0/arakx0.h"

static const double kPi = 3.14159265358979323846;

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static void test_errors(void) {
  ax0_curve_info ci;
  EXPECT(ax0_curve_info_get(12, &ci) == AX0_ERR_NOT_PRIME);
  EXPECT(strstr(ax0_last_error(), "not prime") != NULL);
  EXPECT(ax0_curve_info_get(13, NULL) == AX0_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(ax0_status_string(AX0_ERR_POLE), "pole") == 0);
  double re, im;
  EXPECT(ax0_phi_closed(AX0_PAIR_INF_INF, 1.0, 0.0, 5, &re, &im) == AX0_ERR_POLE);
  EXPECT(ax0_phi_closed(AX0_PAIR_INF_INF, 0.4, 0.0, 5, &re, &im) == AX0_ERR_DOMAIN);
  double v, tail;
  EXPECT(ax0_phi_series(AX0_PAIR_INF_INF, 1.5, 5, 100000, 1e-9, &v, &tail) == AX0_ERR_TRUNCATION);
  EXPECT(ax0_phi_series(AX0_PAIR_INF_INF, 1.5, 5, 100000, 0, &v, &tail) == AX0_OK);
  EXPECT(strcmp(ax0_last_error(), "") == 0);
  ax0_fiber* f = NULL;
  EXPECT(ax0_fiber_create(5, 0, &f) != AX0_OK);
  EXPECT(f == NULL);
  EXPECT(ax0_omega_sq(7, AX0_MODE_MAIN_TERM, NULL) == AX0_ERR_INVALID_ARGUMENT);
  ax0_omega o;
  EXPECT(ax0_omega_sq(7, AX0_MODE_MAIN_TERM, &o) == AX0_ERR_DOMAIN);
  ax0_scan* s = NULL;
  EXPECT(ax0_scan_create(100, 50, AX0_MODE_MAIN_TERM, &s) == AX0_ERR_INVALID_ARGUMENT);
  ax0_report* r = NULL;
  EXPECT(ax0_verify("nonsense", 13, 0, 0, &r) == AX0_ERR_INVALID_ARGUMENT);
  EXPECT(ax0_verify(NULL, 13, 0, 0, &r) == AX0_ERR_INVALID_ARGUMENT);
  /* null handles are harmless */
  ax0_fiber_destroy(NULL);
  EXPECT(ax0_fiber_size(NULL) == 0);
  EXPECT(ax0_classes_form(NULL, 0) == NULL);
}

static void test_info(void) {
  ax0_curve_info ci;
  EXPECT(ax0_curve_info_get(13, &ci) == AX0_OK);
  EXPECT(ci.genus == 8);
  EXPECT(ci.level == 169);
  EXPECT(ci.index == 182);
  EXPECT(ci.cusp_count == 14);
  EXPECT(ci.c_num == 7 && ci.c_den == 6);
  EXPECT(ci.s_p == 7);
  EXPECT(fabs(ci.volume - kPi * 13 * 14 / 3) < 1e-12);
  EXPECT(ax0_curve_info_get(11, &ci) == AX0_OK);
  EXPECT(ci.s_p == 5);
  EXPECT(ax0_is_prime(1000003) == 1);
  EXPECT(ax0_is_prime(1000001) == 0);
  EXPECT(strcmp(ax0_version(), "0.3.0") == 0);
}

static void test_eisenstein(void) {
  double pole, constant, a;
  EXPECT(ax0_scattering_expansion(AX0_PAIR_INF_INF, 5, &pole, &constant) == AX0_OK);
  EXPECT(fabs(pole - 3.0 / (kPi * 30)) < 1e-15);
  EXPECT(fabs(constant + 0.180284751889411) < 1e-12);
  EXPECT(ax0_constant_a(&a) == AX0_OK);
  EXPECT(fabs(a + 0.4705365757383667) < 1e-14);
  ax0_es1 e;
  EXPECT(ax0_verify_es1(0.0, 1.0, 3.0, 5, 300, &e) == AX0_OK);
  EXPECT(e.residual < 1e-6 && e.tail_bound < 1e-6);
  double l1, lp;
  EXPECT(ax0_L_series(1, 2.0, 7, &l1) == AX0_OK);
  EXPECT(ax0_L_series(7, 2.0, 7, &lp) == AX0_OK);
  EXPECT(fabs(l1 - (2401.0 - 1) / 6 * lp) < 1e-12 * l1);
}

static void test_quadforms(void) {
  int64_t x, y;
  EXPECT(ax0_pell_min(21, &x, &y) == AX0_OK);
  EXPECT(x == 5 && y == 1);
  double e, res;
  EXPECT(ax0_epstein_definite(1, 0, 1, 2.0, &e) == AX0_OK);
  EXPECT(fabs(e - 1.5067030099229850) < 1e-12);
  EXPECT(ax0_residue_epstein(1, 0, 1, &res) == AX0_OK);
  EXPECT(fabs(res - kPi / 4) < 1e-15);
  ax0_class_set* cs = NULL;
  EXPECT(ax0_classes_create(0, 13, &cs) == AX0_OK);
  EXPECT(ax0_classes_count(cs) == 2);
  for (size_t i = 0; i < ax0_classes_count(cs); ++i) {
    const char* form = ax0_classes_form(cs, i);
    EXPECT(form != NULL && form[0] == '[');
    EXPECT(ax0_classes_stab_order(cs, i) > 0);
  }
  EXPECT(ax0_classes_form(cs, 99) == NULL);
  ax0_classes_destroy(cs);
  EXPECT(ax0_classes_create(0, 7, &cs) == AX0_OK);
  EXPECT(ax0_classes_count(cs) == 0);
  ax0_classes_destroy(cs);
  double w;
  /* x^2 + xz - z^2 has no zeros mod 25, but 5 is a square mod 11 */
  EXPECT(ax0_theta_class_weight(3, 5, &w) == AX0_OK && w == 0);
  EXPECT(ax0_theta_class_weight(3, 11, &w) == AX0_OK && w > 0);
  EXPECT(ax0_zeta_level_residue(1, 7, &w) == AX0_OK && w > 0);
}

static void test_fiber(void) {
  ax0_fiber* f = NULL;
  EXPECT(ax0_fiber_create(13, 0, &f) == AX0_OK);
  EXPECT(ax0_fiber_size(f) == 5);
  EXPECT(strcmp(ax0_fiber_name(f, 2), "C11") == 0);
  EXPECT(ax0_fiber_multiplicity(f, 2) == 12);
  EXPECT(strcmp(ax0_fiber_intersection(f, 0, 0), "-13/1") == 0);
  EXPECT(strcmp(ax0_fiber_adjunction_sum(f), "14/1") == 0);
  EXPECT(ax0_fiber_expected_adjunction(f) == 14);
  EXPECT(ax0_fiber_valid(f) == 1);
  EXPECT(ax0_fiber_contracted_count(f) == 0);
  EXPECT(ax0_fiber_intersection(f, 5, 0) == NULL);
  ax0_fiber_destroy(f);

  EXPECT(ax0_fiber_create(13, 1, &f) == AX0_OK);
  EXPECT(ax0_fiber_size(f) == 2);
  EXPECT(strcmp(ax0_fiber_intersection(f, 0, 1), "7/1") == 0);
  EXPECT(strcmp(ax0_fiber_intersection(f, 1, 1), "-7/1") == 0);
  EXPECT(ax0_fiber_contracted_count(f) == 3);
  EXPECT(strcmp(ax0_fiber_contracted(f, 0), "C11") == 0);
  EXPECT(ax0_fiber_basis_size(f) == 5);
  EXPECT(strcmp(ax0_fiber_pullback(f, 0, 2), "6/1") == 0);
  EXPECT(strcmp(ax0_fiber_pullback(f, 0, 4), "2/1") == 0);
  ax0_fiber_destroy(f);
}

static void test_omega(void) {
  ax0_omega o;
  EXPECT(ax0_omega_sq(11, AX0_MODE_MAIN_TERM, &o) == AX0_OK);
  EXPECT(o.g == 6 && o.algebraic_num == 7 && o.algebraic_den == 1);
  EXPECT(o.e_p_vanishes == 1);
  EXPECT(fabs(o.ratio - 0.4974747474747474) < 1e-12);
  int ok = 0;
  EXPECT(ax0_dm_orthogonal(101, &ok) == AX0_OK && ok == 1);
  double g_main, g_const;
  EXPECT(ax0_green_estimate(101, AX0_MODE_MAIN_TERM, &g_main) == AX0_OK);
  EXPECT(ax0_green_estimate(101, AX0_MODE_CONSTANTS, &g_const) == AX0_OK);
  EXPECT(g_main > 0 && g_const > 0);

  ax0_scan* s = NULL;
  EXPECT(ax0_scan_create(11, 100, AX0_MODE_MAIN_TERM, &s) == AX0_OK);
  EXPECT(ax0_scan_count(s) == 21);
  EXPECT(ax0_scan_row(s, 0, &o) == AX0_OK && o.p == 11);
  EXPECT(ax0_scan_row(s, 20, &o) == AX0_OK && o.p == 97);
  EXPECT(ax0_scan_row(s, 21, &o) == AX0_ERR_INVALID_ARGUMENT);
  EXPECT(ax0_scan_max_residual_prime(s) == 13);
  ax0_scan_destroy(s);
}

static void test_verify(void) {
  ax0_report* r = NULL;
  EXPECT(ax0_verify("fiber", 13, 0, 0, &r) == AX0_OK);
  EXPECT(ax0_report_count(r) > 5);
  EXPECT(ax0_report_failures(r) == 0);
  for (size_t i = 0; i < ax0_report_count(r); ++i) EXPECT(ax0_report_passed(r, i) == 1);
  ax0_report_destroy(r);
  EXPECT(ax0_verify("all", 3, 0, 0, &r) == AX0_OK);
  EXPECT(ax0_report_skipped_count(r) == 2);
  EXPECT(strcmp(ax0_report_skipped(r, 0), "fiber") == 0);
  ax0_report_destroy(r);
}

int main(void) {
  test_errors();
  test_info();
  test_eisenstein();
  test_quadforms();
  test_fiber();
  test_omega();
  test_verify();
  if (failures) {
    fprintf(stderr, "%d C API expectation(s) failed\n", failures);
    return 1;
  }
  printf("C API: all expectations met\n");
  return 0;
}
