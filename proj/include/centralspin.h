#ifndef CENTRALSPIN_H
#define CENTRALSPIN_H

/* C interface to the central-spin library. All functions are thread-safe;
 * the last error message is kept per thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CS_API __declspec(dllexport)
#else
#define CS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Numeric values double as the CLI exit codes. */
typedef enum cs_status {
  CS_OK = 0,
  CS_ERR_PARSE = 2,
  CS_ERR_VALIDATION = 3,
  CS_ERR_TOLERANCE = 4,
  CS_ERR_INTERNAL = 5,
  CS_ERR_ARGUMENT = 6
} cs_status;

typedef struct cs_chain_params {
  int n_sites;       /* Nb, even */
  double coupling;   /* lambda */
  double anisotropy; /* gamma */
  double field;      /* h */
} cs_chain_params;

typedef struct cs_central_params {
  int n_central;   /* Nc */
  double coupling; /* eta */
  double beta;
  double polar;    /* vartheta */
  double azimuth;  /* varphi */
} cs_central_params;

typedef struct cs_entanglement {
  double qfi;
  double direction[3];
  int depth;
} cs_entanglement;

typedef struct cs_model cs_model;
typedef struct cs_result cs_result;

CS_API const char* cs_version(void);

/* Message of the last failed call on this thread, or "". */
CS_API const char* cs_last_error(void);

CS_API cs_status cs_model_create(const cs_chain_params* chain, const cs_central_params* central,
                                 cs_model** out);
CS_API void cs_model_destroy(cs_model* model);

/* Nc + 1. */
CS_API int cs_model_dim(const cs_model* model);

/* Row-major rho(t), interleaved (re, im); `len` must be at least 2 * dim * dim. */
CS_API cs_status cs_model_reduced_density(const cs_model* model, double t, double* out, size_t len);

/* Same layout, from dense evolution of the bath chain (Nb <= 10). */
CS_API cs_status cs_model_reduced_density_oracle(const cs_model* model, double t, double* out,
                                                 size_t len);

CS_API cs_status cs_model_entanglement(const cs_model* model, double t, cs_entanglement* out);

/* Runs a scenario given as text with optional "key=value" overrides. On
 * CS_OK, and on CS_ERR_TOLERANCE from an oracle check, *out holds the result. */
CS_API cs_status cs_scenario_run(const char* text, const char* const* overrides, size_t n_overrides,
                                 int jobs, cs_result** out);

/* Default oracle-check suite. */
CS_API cs_status cs_check_run(uint64_t seed, int draws, int jobs, cs_result** out);

CS_API const char* cs_result_csv(const cs_result* result);
CS_API const char* cs_result_summary(const cs_result* result);
/* Value of the scenario's `out` key, or "" to print to stdout. */
CS_API const char* cs_result_output_path(const cs_result* result);
CS_API void cs_result_destroy(cs_result* result);

#ifdef __cplusplus
}
#endif

#endif
