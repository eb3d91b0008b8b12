/*
 * Copyright 2026 catsense developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the catsense library: a simulator for a cat-state Ramsey
 * interferometer reading out the frequency shift of a bosonic mode.
 *
 * All functions return catsense_status; CATSENSE_OK means success. On any
 * failure catsense_last_error() carries a thread-local message. Handles
 * (catsense_sweep, catsense_result, catsense_report) are opaque and owned by
 * the caller through the matching _free function.
 *
 * Angles are radians; D is the cat size |alpha0|^2; kappa_t is the
 * dimensionless loss kappa * T.
 */

#ifndef CATSENSE_H
#define CATSENSE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef CATSENSE_API
#if defined(_WIN32)
#define CATSENSE_API __declspec(dllimport)
#else
#define CATSENSE_API __attribute__((visibility("default")))
#endif
#endif

typedef enum catsense_status {
    CATSENSE_OK = 0,
    CATSENSE_ERR_INVALID_ARGUMENT = 1,
    CATSENSE_ERR_RESOURCE_LIMIT = 2,
    CATSENSE_ERR_TRUNCATION_TOO_SMALL = 3,
    CATSENSE_ERR_STEP_SIZE_FAILURE = 4,
    CATSENSE_ERR_DEGENERATE_BIAS = 5,
    CATSENSE_ERR_NO_INTERIOR_MAXIMUM = 6,
    CATSENSE_ERR_UNSUPPORTED_SHAPE = 7,
    CATSENSE_ERR_IO = 8,
    CATSENSE_ERR_INTERNAL = 9
} catsense_status;

CATSENSE_API const char *catsense_version(void);
CATSENSE_API const char *catsense_status_name(catsense_status status);
/* Message for the most recent failure on this thread; never NULL. */
CATSENSE_API const char *catsense_last_error(void);

/* ---- scalar protocol quantities ---- */

/* Lossless readout probability; paper_literal != 0 evaluates the printed
 * small-angle phase form instead of the exact one. */
CATSENSE_API catsense_status catsense_pg_ideal(double d, double theta, int paper_literal,
                                               double *out_pg);

/* Readout probability with photon loss kappa_t during the free evolution. */
CATSENSE_API catsense_status catsense_pg_damped(double d, double theta, double kappa_t,
                                                double *out_pg);

/* High-contrast approximation [1 - e^{-d kappa_t/2} cos(d theta)] / 2. */
CATSENSE_API catsense_status catsense_pg_approx(double d, double theta, double kappa_t,
                                                double *out_pg);

/* Brute-force truncated-Fock evaluation of the same probability. */
CATSENSE_API catsense_status catsense_pg_oracle(double d, double theta, double kappa_t,
                                                double *out_pg);

/* Signal-to-noise ratio |dPg/dtheta| / sqrt(Pg (1 - Pg)), closed form. */
CATSENSE_API catsense_status catsense_snr(double d, double theta, double kappa_t,
                                          double *out_snr);

/* Central-difference variant; step <= 0 selects 1e-6 / D. */
CATSENSE_API catsense_status catsense_snr_central(double d, double theta, double kappa_t,
                                                  double step, double *out_snr);

/* Operating point pi / (2 D). */
CATSENSE_API catsense_status catsense_bias_point(double d, double *out_theta);

/* ---- parameter sweeps ---- */

typedef struct catsense_sweep catsense_sweep;
typedef struct catsense_result catsense_result;

CATSENSE_API catsense_sweep *catsense_sweep_new(void);
CATSENSE_API void catsense_sweep_free(catsense_sweep *spec);

CATSENSE_API catsense_status catsense_sweep_d_axis(catsense_sweep *spec, double min,
                                                   double max, int count);
CATSENSE_API catsense_status catsense_sweep_theta_axis(catsense_sweep *spec, double min,
                                                       double max, int count);
/* Pin theta to the bias point pi/(2 D) per D column. */
CATSENSE_API catsense_status catsense_sweep_theta_bias(catsense_sweep *spec);
CATSENSE_API catsense_status catsense_sweep_kappat_axis(catsense_sweep *spec, double min,
                                                        double max, int count);
/* Quantity names: pg_exact, pg_approx, pg_paper_literal, pg_oracle, snr. */
CATSENSE_API catsense_status catsense_sweep_quantity(catsense_sweep *spec, const char *name);
CATSENSE_API catsense_status catsense_sweep_oracle_ceiling(catsense_sweep *spec, double max_d);
CATSENSE_API catsense_status catsense_sweep_title(catsense_sweep *spec, const char *title);

CATSENSE_API catsense_status catsense_sweep_run(const catsense_sweep *spec,
                                                catsense_result **out_result);

/* Frozen figure grids: fig1a, fig1b, fig1c, fig2a, fig2b, fig2c. */
CATSENSE_API catsense_status catsense_preset_run(const char *name,
                                                 catsense_result **out_result);

CATSENSE_API void catsense_result_free(catsense_result *result);
CATSENSE_API long catsense_result_rows(const catsense_result *result);
/* Columns: D, theta, kappaT, or any quantity name. out_present reports
 * whether the column holds data for this result. */
CATSENSE_API catsense_status catsense_result_value(const catsense_result *result, long row,
                                                   const char *column, double *out_value,
                                                   int *out_present);
CATSENSE_API catsense_status catsense_result_write_csv(const catsense_result *result,
                                                       const char *path, int no_metadata);
CATSENSE_API catsense_status catsense_result_write_svg(const catsense_result *result,
                                                       const char *path);

/* ---- optimum search ---- */

/* Coarse grid over [d_min, d_max] (count points, >= 8) plus golden-section
 * refinement of R(D) at the bias point. */
CATSENSE_API catsense_status catsense_find_optimal_d(double kappa_t, double d_min,
                                                     double d_max, int count,
                                                     double *out_d_star, double *out_r_star);

/* ---- oracle-vs-analytic validation ---- */

typedef struct catsense_report catsense_report;

/* theta_scales are fringe-phase multiples: theta = scale / D per point. Any
 * list pointer may be NULL to keep the default grid. */
CATSENSE_API catsense_status catsense_validation_run(const double *d_values, size_t n_d,
                                                     const double *theta_scales,
                                                     size_t n_theta,
                                                     const double *kappa_t_values,
                                                     size_t n_kappa_t, double oracle_ceiling,
                                                     catsense_report **out_report);
CATSENSE_API void catsense_report_free(catsense_report *report);
CATSENSE_API int catsense_report_passed(const catsense_report *report);
CATSENSE_API double catsense_report_max_deviation(const catsense_report *report);
/* Owned by the report handle. */
CATSENSE_API const char *catsense_report_text(const catsense_report *report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CATSENSE_H */
