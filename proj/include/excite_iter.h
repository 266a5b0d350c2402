/* Copyright The excite-iter Authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the excited-state iteration library.
 *
 * All objects are opaque handles released with the matching *_free call.
 * Functions return an ei_status; on failure ei_last_error_message() describes
 * the most recent error on the calling thread.
 */

#ifndef EXCITE_ITER_H
#define EXCITE_ITER_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(EXCITE_ITER_BUILDING)
#    define EI_API __declspec(dllexport)
#  else
#    define EI_API __declspec(dllimport)
#  endif
#else
#  define EI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ei_status
{
  EI_OK = 0,
  EI_ERR_INVALID_ARGUMENT = 1,
  EI_ERR_OUT_OF_DOMAIN = 2,
  EI_ERR_NO_EIGENVALUE = 3,
  EI_ERR_WRONG_PARITY = 4,
  EI_ERR_DEGENERATE_ANCHOR = 5,
  EI_ERR_OVERFLOW = 6,
  EI_ERR_IO = 7,
  EI_ERR_PARSE = 8,
  EI_ERR_INTERNAL = 9
} ei_status;

EI_API const char *ei_version(void);
EI_API const char *ei_status_string(ei_status status);
/* Valid until the next failing call on the same thread. */
EI_API const char *ei_last_error_message(void);

/* ---- ground state -------------------------------------------------------- */

typedef struct ei_groundstate ei_groundstate;

/* Analytic box ground state on [0, 1] with n_points nodes. */
EI_API ei_status ei_groundstate_soluble(double delta, size_t n_points, ei_groundstate **out);

/* Shooting solve for the quartic well. x_max <= 0 selects the default domain;
 * e_lo >= e_hi selects the default energy bracket; tol is relative. */
EI_API ei_status ei_groundstate_quartic(double g, double x_max, size_t n_points, double e_lo,
                                        double e_hi, double tol, ei_groundstate **out);

EI_API ei_status ei_groundstate_load(const char *csv_path, const char *json_path,
                                     ei_groundstate **out);
EI_API ei_status ei_groundstate_save(const ei_groundstate *gs, const char *csv_path,
                                     const char *json_path);

EI_API size_t ei_groundstate_size(const ei_groundstate *gs);
EI_API double ei_groundstate_energy(const ei_groundstate *gs);
/* Any of x, s, s_prime may be NULL. Each non-NULL buffer holds n >= size. */
EI_API ei_status ei_groundstate_copy_nodes(const ei_groundstate *gs, double *x, double *s,
                                           double *s_prime, size_t n);
EI_API void ei_groundstate_free(ei_groundstate *gs);

/* ---- iteration ----------------------------------------------------------- */

typedef enum ei_trial
{
  EI_TRIAL_LINEAR = 0,
  EI_TRIAL_SATURATING = 1
} ei_trial;

typedef enum ei_run_status
{
  EI_RUN_CONVERGED = 0,
  EI_RUN_MAX_ITERS = 1,
  EI_RUN_STALLED = 2
} ei_run_status;

typedef struct ei_run_options
{
  double anchor;
  ei_trial trial;
  int max_iters;
  double tol;
} ei_run_options;

/* anchor 1, saturating trial, 8 iterations, tol 1e-9. */
EI_API void ei_run_options_init(ei_run_options *options);

typedef struct ei_report ei_report;

EI_API ei_status ei_run(const ei_groundstate *gs, const ei_run_options *options, ei_report **out);

EI_API int ei_report_iterations(const ei_report *report);
/* eps_n for n = 1 .. iterations; NaN outside that range. */
EI_API double ei_report_eps(const ei_report *report, int n);
EI_API double ei_report_orthogonality_residual(const ei_report *report, int n);
EI_API ei_run_status ei_report_status(const ei_report *report);
EI_API double ei_report_e_gd(const ei_report *report);
EI_API double ei_report_e_odd(const ei_report *report);
EI_API double ei_report_e_mean(const ei_report *report);
/* chi_n for n = 0 .. iterations into buf (n_buf >= grid size). */
EI_API ei_status ei_report_copy_chi(const ei_report *report, int n, double *buf, size_t n_buf);
EI_API void ei_report_free(ei_report *report);

/* ---- experiments --------------------------------------------------------- */

typedef enum ei_case
{
  EI_CASE_SOLUBLE = 0,
  EI_CASE_QUARTIC = 1
} ei_case;

/* Parameters left NaN (delta, g, x_max) or NULL (trial, gs_cache) take the
 * per-case defaults. Setting delta for the quartic case or g for the soluble
 * case is an error. */
typedef struct ei_case_config
{
  ei_case case_kind;
  double delta;
  double g;
  double anchor;
  const char *trial;
  int max_iters;
  double tol;
  double x_max;
  size_t n_points;
  const char *out_dir;
  const char *gs_cache;
} ei_case_config;

EI_API void ei_case_config_init(ei_case_config *config);

/* Runs the experiment and writes summary.json, chi_curves.csv,
 * wavefunctions.csv and the ground-state artifacts into out_dir. */
EI_API ei_status ei_run_case(const ei_case_config *config);

/* ---- regression against published values --------------------------------- */

typedef struct ei_comparison ei_comparison;

typedef struct ei_comparison_row
{
  const char *key;
  double expected;
  double actual;
  double abs_deviation;
  double rel_deviation;
  double tolerance;
  int pass;
} ei_comparison_row;

EI_API ei_status ei_compare_summary(const char *summary_path, const char *tag,
                                    ei_comparison **out);
EI_API size_t ei_comparison_rows(const ei_comparison *cmp);
EI_API ei_status ei_comparison_row_at(const ei_comparison *cmp, size_t i, ei_comparison_row *row);
/* Empty string when the summary matches the table's run configuration. */
EI_API const char *ei_comparison_config_mismatch(const ei_comparison *cmp);
EI_API int ei_comparison_passed(const ei_comparison *cmp);
EI_API void ei_comparison_free(ei_comparison *cmp);

/* Number of known reference tags and their names. */
EI_API size_t ei_reference_tag_count(void);
EI_API const char *ei_reference_tag(size_t i);

#ifdef __cplusplus
}
#endif

#endif /* EXCITE_ITER_H */
