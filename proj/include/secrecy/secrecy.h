/*
   Copyright 2026 The secrecy-mimo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SECRECY_SECRECY_H
#define SECRECY_SECRECY_H

/* C interface to the secrecy-metrics library. Every function returns a
 * status; on failure secrecy_last_error() describes it (per thread). Handles
 * are opaque and released with the matching destroy function. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define SECRECY_API __declspec(dllexport)
#else
#  define SECRECY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum secrecy_status {
    SECRECY_OK = 0,
    SECRECY_ERR_INVALID_ARGUMENT = 1, /* null pointer or unknown enum value */
    SECRECY_ERR_DOMAIN = 2,           /* argument outside the mathematical domain */
    SECRECY_ERR_POLE = 3,             /* gamma-function pole */
    SECRECY_ERR_CONVERGENCE = 4,      /* quadrature, root finding or fit did not converge */
    SECRECY_ERR_CONFIG = 5,           /* malformed or inconsistent configuration */
    SECRECY_ERR_INTERNAL = 6
} secrecy_status;

typedef enum secrecy_ordering { SECRECY_NEAREST = 0, SECRECY_BEST = 1 } secrecy_ordering;

/* Legitimate ordering first, eavesdropper second. */
typedef enum secrecy_case {
    SECRECY_CASE_NN = 0,
    SECRECY_CASE_NB = 1,
    SECRECY_CASE_BN = 2,
    SECRECY_CASE_BB = 3
} secrecy_case;

typedef enum secrecy_metric {
    SECRECY_METRIC_COP = 0,              /* outage of the configured ordering */
    SECRECY_METRIC_PNZ = 1,              /* probability of non-zero secrecy capacity */
    SECRECY_METRIC_CAPACITY = 2,         /* ergodic capacity of the k-th user */
    SECRECY_METRIC_WIRETAP_CAPACITY = 3, /* ergodic capacity of the first eavesdropper */
    SECRECY_METRIC_ERGODIC_SECRECY = 4   /* clipped difference of the two */
} secrecy_metric;

typedef enum secrecy_method {
    SECRECY_METHOD_CLOSED_FORM = 0,
    SECRECY_METHOD_QUADRATURE = 1,
    SECRECY_METHOD_MONTE_CARLO = 2
} secrecy_method;

typedef enum secrecy_provenance {
    SECRECY_PROVENANCE_CLOSED_FORM = 0,
    SECRECY_PROVENANCE_QUADRATURE = 1,
    SECRECY_PROVENANCE_MONTE_CARLO = 2
} secrecy_provenance;

/* Per-antenna-pair link law; omega <= 0 selects unit mean power. */
typedef struct secrecy_alpha_mu {
    double alpha;
    double mu;
    double omega;
} secrecy_alpha_mu;

typedef struct secrecy_scenario_params {
    int d;
    double upsilon;
    double lambda_b;
    double lambda_e;
    secrecy_alpha_mu link_b;
    secrecy_alpha_mu link_e;
    int n_a, n_b, n_e;
    double eta_k;
    double eta_e;
    double rate;
    int k;
    secrecy_ordering ordering;
    secrecy_ordering eavesdropper;
} secrecy_scenario_params;

typedef struct secrecy_mc_config {
    uint64_t trials;
    uint64_t master_seed;
    double window_radius; /* 0: automatic */
    int workers;
    double ci_level;
} secrecy_mc_config;

typedef struct secrecy_estimate {
    double value;
    double half_width;
    double ci_low;
    double ci_high;
    secrecy_provenance provenance;
    uint64_t trials_used;
    uint64_t rejected;
} secrecy_estimate;

typedef struct secrecy_scenario secrecy_scenario;
typedef struct secrecy_run secrecy_run;

SECRECY_API const char* secrecy_version(void);
SECRECY_API const char* secrecy_status_string(secrecy_status status);
/* Message of the last failure on the calling thread; empty if none. */
SECRECY_API const char* secrecy_last_error(void);

/* Documented defaults: d = 2, upsilon = 2, Rayleigh links, one antenna each,
 * unit SNR scales and densities, rate 1, k = 1, nearest orderings. */
SECRECY_API void secrecy_scenario_params_default(secrecy_scenario_params* params);
SECRECY_API void secrecy_mc_config_default(secrecy_mc_config* mc);

SECRECY_API secrecy_status secrecy_scenario_create(const secrecy_scenario_params* params, secrecy_scenario** out);
SECRECY_API void secrecy_scenario_destroy(secrecy_scenario* scenario);
/* Summed-gain laws fitted for the MIMO links. */
SECRECY_API secrecy_status secrecy_scenario_fading(const secrecy_scenario* scenario, secrecy_alpha_mu* fading_b,
                                                   secrecy_alpha_mu* fading_e);

/* One metric at the scenario's k. The case is used by PNZ and ergodic
 * secrecy only; mc may be NULL unless the method is Monte Carlo. */
SECRECY_API secrecy_status secrecy_eval(const secrecy_scenario* scenario, secrecy_metric metric, secrecy_case which,
                                        secrecy_method method, const secrecy_mc_config* mc, secrecy_estimate* out);
/* Both Monte Carlo ergodic secrecy estimators. */
SECRECY_API secrecy_status secrecy_simulate_ergodic_secrecy(const secrecy_scenario* scenario, secrecy_case which,
                                                            const secrecy_mc_config* mc,
                                                            secrecy_estimate* clipped_difference,
                                                            secrecy_estimate* mean_of_clipped);
SECRECY_API secrecy_status secrecy_max_secure_best_users(const secrecy_scenario* scenario, double tau, int* out);
/* Density and CDF of the k-th user's composite gain under an ordering. */
SECRECY_API secrecy_status secrecy_composite_pdf(const secrecy_scenario* scenario, secrecy_ordering ordering,
                                                 double z, double* out);
SECRECY_API secrecy_status secrecy_composite_cdf(const secrecy_scenario* scenario, secrecy_ordering ordering,
                                                 double z, double* out);

/* Fox H-function H^{m,n}_{p,q}[z | (a_j, A_j); (b_j, B_j)]. */
SECRECY_API secrecy_status secrecy_fox_h(int m, int n, size_t p, const double* a, const double* A, size_t q,
                                         const double* b, const double* B, double z, double* out);

/* Run documents (the command-line tool's engine). */
SECRECY_API secrecy_status secrecy_run_parse(const char* text, secrecy_run** out);
/* Overrides: "command", "figure", "out", "format", "seed", "trials", "workers". */
SECRECY_API secrecy_status secrecy_run_set(secrecy_run* run, const char* option, const char* value);
/* Executes and writes outputs. exit_code: 0 success, 1 validation failure,
 * 2 config error, 3 numeric error; the status is SECRECY_OK whenever the
 * exit code was produced, with the diagnostic in secrecy_last_error(). */
SECRECY_API secrecy_status secrecy_run_execute(secrecy_run* run, int* exit_code);
SECRECY_API void secrecy_run_destroy(secrecy_run* run);

#ifdef __cplusplus
}
#endif

#endif
