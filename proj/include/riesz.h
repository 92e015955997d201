/*
 * C interface to the riesz library: Jacobi-expansion analysis of geodesic and
 * chordal Riesz kernels on spheres and projective spaces, energy evaluation of
 * canonical measures, sign-transition location, and discrete configuration
 * optimization.
 *
 * Conventions:
 *  - Every function returns a riesz_status; results travel through out-params.
 *  - Objects are opaque handles, released with the matching *_free function.
 *  - Strings returned through char** are heap-allocated; release them with
 *    riesz_string_free.
 *  - On failure, riesz_last_error() describes the problem for the calling
 *    thread.
 *
 * Spec strings:
 *  - spaces:  S:<d>, RP:<d>, CP:<d>, HP:<d>, OP:<d>
 *  - kernels: geo:<s>, geolog, chord:<s>, chordlog, acute:<lambda>
 *  - measures: sigma | onb | pole-equator:<w>:<uniform|pair> | file:<path>
 */

#ifndef RIESZ_H
#define RIESZ_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum riesz_status {
  RIESZ_OK = 0,
  RIESZ_ERR_INTERNAL = 1, /* unexpected failure */
  RIESZ_ERR_USAGE = 2,    /* bad spec/argument, unsupported request */
  RIESZ_ERR_NUMERIC = 3,  /* divergent energy, quadrature or solver failure */
  RIESZ_ERR_BRACKET = 4   /* transition bracket endpoints share a sign */
} riesz_status;

typedef struct riesz_space riesz_space;
typedef struct riesz_kernel riesz_kernel;
typedef struct riesz_coeff_table riesz_coeff_table;
typedef struct riesz_opt_run riesz_opt_run;

const char* riesz_version(void);
const char* riesz_last_error(void);
void riesz_string_free(char* s);

/* ---- spaces ---- */

riesz_status riesz_space_parse(const char* spec, riesz_space** out);
riesz_status riesz_space_params(const riesz_space* space, double* alpha, double* beta, int* dim);
void riesz_space_free(riesz_space* space);

/* ---- kernels ---- */

riesz_status riesz_kernel_parse(const char* spec, riesz_kernel** out);
void riesz_kernel_free(riesz_kernel* kernel);

/* ---- Jacobi coefficients ---- */

riesz_status riesz_coeffs_compute(const riesz_space* space, const riesz_kernel* kernel, int n_max,
                                  double tol, riesz_coeff_table** out);
int riesz_coeff_table_size(const riesz_coeff_table* table);
riesz_status riesz_coeff_table_entry(const riesz_coeff_table* table, int n, double* coefficient,
                                     double* error);
riesz_status riesz_coeff_table_json(const riesz_coeff_table* table, char** out);
riesz_status riesz_coeff_table_csv(const riesz_coeff_table* table, char** out);
void riesz_coeff_table_free(riesz_coeff_table* table);

/* Sign-transition bisection on a kernel family parameter.
 * family is "geo", "chord" or "acute". On success *estimate holds the located
 * parameter and *json_report (optional) a full report with bracket history. */
riesz_status riesz_transition(const riesz_space* space, const char* family, double lo, double hi,
                              int n_max, double param_tol, double* estimate, char** json_report);

/* ---- energies ---- */

/* Energy of the measure described by measure_spec. Infinite energies are
 * reported as +inf in *value with RIESZ_OK. */
riesz_status riesz_energy(const riesz_space* space, const riesz_kernel* kernel,
                          const char* measure_spec, double tol, double* value);

/* w* = lambda/(2 lambda + 1) and the pole-equator energy it attains. */
riesz_status riesz_optimal_pole_weight(double lambda, double* w, double* value);

/* ---- configuration optimization ---- */

riesz_status riesz_optimize(const riesz_space* space, const riesz_kernel* kernel, int n_points,
                            int restarts, int max_iters, uint64_t seed, riesz_opt_run** out);
riesz_status riesz_opt_run_best_energy(const riesz_opt_run* run, double* energy);
riesz_status riesz_opt_run_json(const riesz_opt_run* run, char** out);
riesz_status riesz_opt_run_trace_csv(const riesz_opt_run* run, char** out);
riesz_status riesz_opt_run_histogram_csv(const riesz_opt_run* run, char** out);
void riesz_opt_run_free(riesz_opt_run* run);

/* ---- diagnostics ---- */

/* Max |geodesic(FP^1) - geodesic(S^D) after tau| over random pairs.
 * field is 'R', 'C' or 'H'. */
riesz_status riesz_isometry_check(char field, int pairs, uint64_t seed, double* max_deviation);

/* Gauss-Jacobi rule for the probability measure nu^{(alpha,beta)} as CSV. */
riesz_status riesz_gauss_jacobi_csv(double alpha, double beta, int nodes, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RIESZ_H */
