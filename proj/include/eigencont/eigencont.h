// Copyright 2026 The eigencont Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the eigencont library.
 *
 * Objects are opaque handles created by ec_*_create/build/parse functions and
 * released with the matching ec_*_free. Every fallible call returns an
 * ec_status; on failure ec_last_error() returns a message for the calling
 * thread, valid until that thread's next failing call.
 *
 * Complex arrays are interleaved (re, im) doubles. Matrices are row-major.
 * "len" arguments count complex entries, so buffers hold 2*len doubles.
 */
#ifndef EIGENCONT_EIGENCONT_H
#define EIGENCONT_EIGENCONT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define EC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define EC_API __attribute__((visibility("default")))
#else
#define EC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ec_status {
  EC_OK = 0,
  EC_ERROR_INVALID_ARGUMENT = 1,
  EC_ERROR_DIMENSION = 2,
  EC_ERROR_DATA = 3,
  EC_ERROR_CONFIG = 4,
  EC_ERROR_NUMERICS = 5,
  EC_ERROR_INTERNAL = 6
} ec_status;

typedef struct ec_hamiltonian ec_hamiltonian;
typedef struct ec_training_set ec_training_set;
typedef struct ec_subspace ec_subspace;
typedef struct ec_sweep_config ec_sweep_config;
typedef struct ec_sweep_result ec_sweep_result;

EC_API const char* ec_version(void);
EC_API const char* ec_status_string(ec_status status);
EC_API const char* ec_last_error(void);
/* Releases strings returned through char** out-parameters. */
EC_API void ec_string_free(char* s);

/* ---- Hamiltonians ---------------------------------------------------- */

EC_API ec_status ec_hamiltonian_xy(int n, double j, double bx, int periodic,
                                   ec_hamiltonian** out);
EC_API ec_status ec_hamiltonian_xxz(int n, double j, int periodic,
                                    ec_hamiltonian** out);
/* CSV header: R,c_II,c_ZI,c_IZ,c_ZZ,c_XX,E_nuc */
EC_API ec_status ec_hamiltonian_h2_csv(const char* path, ec_hamiltonian** out);
EC_API void ec_hamiltonian_free(ec_hamiltonian* h);

EC_API int ec_hamiltonian_num_qubits(const ec_hamiltonian* h);
EC_API size_t ec_hamiltonian_num_terms(const ec_hamiltonian* h);
/* Pauli letters of term k (NUL-terminated) and its coefficient at g. */
EC_API ec_status ec_hamiltonian_term(const ec_hamiltonian* h, size_t k,
                                     double g, char* pauli, size_t pauli_cap,
                                     double* coefficient);
EC_API ec_status ec_hamiltonian_offset(const ec_hamiltonian* h, double g,
                                       double* offset);
/* All 2^n eigenvalues of H(g), ascending; `energies` holds 2^n doubles. */
EC_API ec_status ec_hamiltonian_spectrum(const ec_hamiltonian* h, double g,
                                         double* energies, size_t len);
/* Re <v|H(g)|v> for a normalized state of 2^n complex amplitudes. */
EC_API ec_status ec_energy_expectation(const ec_hamiltonian* h, double g,
                                       const double* state, size_t len,
                                       double* energy);

/* ---- Training sets --------------------------------------------------- */

/* m points (g[i], eigenstate index idx[i]); index 0 is the ground state. */
EC_API ec_status ec_training_set_build(const ec_hamiltonian* h, const double* g,
                                       const int* idx, size_t m,
                                       ec_training_set** out);
EC_API void ec_training_set_free(ec_training_set* ts);
EC_API size_t ec_training_set_size(const ec_training_set* ts);
EC_API ec_status ec_training_set_state(const ec_training_set* ts, size_t i,
                                       double* amplitudes, size_t len);

/* ---- Subspace measurement -------------------------------------------- */

typedef struct ec_measurement_config {
  int shots_mode; /* 0 = exact, 1 = simulated Hadamard-test shots */
  int64_t shots;
  uint64_t seed;
  int has_noise;
  double eps01; /* P(read 1 | true 0) */
  double eps10; /* P(read 0 | true 1) */
  int mitigate;
} ec_measurement_config;

EC_API void ec_measurement_config_init(ec_measurement_config* cfg);

EC_API ec_status ec_subspace_measure(const ec_training_set* ts,
                                     const ec_hamiltonian* h,
                                     const ec_measurement_config* cfg,
                                     ec_subspace** out);
EC_API void ec_subspace_free(ec_subspace* sm);
EC_API size_t ec_subspace_dim(const ec_subspace* sm);
EC_API size_t ec_subspace_estimator_calls(const ec_subspace* sm);
/* Projected H(g) and S, each dim*dim complex, row-major. */
EC_API ec_status ec_subspace_assemble(const ec_subspace* sm,
                                      const ec_hamiltonian* h, double g,
                                      double* h_out, double* s_out);
/* JSON dump of S and every T^k; free with ec_string_free. */
EC_API ec_status ec_subspace_to_json(const ec_subspace* sm,
                                     const ec_hamiltonian* h, char** json);

/* ---- Generalized eigenproblem ---------------------------------------- */

/* Solves H c = E S c for m x m Hermitian inputs with relative overlap
 * threshold eps. Writes `*rank` energies (ascending) and, if `coeffs` is
 * non-NULL, the rank coefficient vectors one after another (rank*m complex). */
EC_API ec_status ec_gevp_solve(size_t m, const double* h, const double* s,
                               double eps, double* energies, double* coeffs,
                               size_t* rank);

/* ---- LCU -------------------------------------------------------------- */

/* Prepares the normalized state proportional to sum_m c_m |phi_m>. */
EC_API ec_status ec_lcu_combine(const ec_training_set* ts,
                                const double* coeffs, size_t m, double* state,
                                size_t len, double* success_probability);

/* ---- Sweeps ----------------------------------------------------------- */

EC_API ec_status ec_sweep_config_parse(const char* toml_text,
                                       const char* base_dir,
                                       ec_sweep_config** out);
EC_API void ec_sweep_config_free(ec_sweep_config* cfg);
EC_API ec_status ec_sweep_config_set_seed(ec_sweep_config* cfg, uint64_t seed);
/* NULL or "" leaves the configured path unchanged. */
EC_API ec_status ec_sweep_config_set_output(ec_sweep_config* cfg,
                                            const char* path);
/* 1 if a CSV output path is configured. */
EC_API int ec_sweep_config_has_output(const ec_sweep_config* cfg);
EC_API ec_status ec_sweep_config_set_dump_path(ec_sweep_config* cfg,
                                               const char* path);

EC_API ec_status ec_sweep_run(const ec_sweep_config* cfg,
                              ec_sweep_result** out);
EC_API void ec_sweep_result_free(ec_sweep_result* r);
EC_API size_t ec_sweep_result_num_rows(const ec_sweep_result* r);
EC_API size_t ec_sweep_result_measurement_passes(const ec_sweep_result* r);
/* Returns 1 and writes the level-0 max |E_ec - E_exact| if it was computed. */
EC_API int ec_sweep_result_max_abs_err(const ec_sweep_result* r, double* out);
EC_API ec_status ec_sweep_result_csv(const ec_sweep_result* r, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* EIGENCONT_EIGENCONT_H */
