// Copyright 2026 The minrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the minrep library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a minrep_status; on failure minrep_last_error() holds
 * a message for the calling thread until its next failing call. Strings
 * returned through char** are owned by the caller and released with
 * minrep_string_free. */
#ifndef MINREP_MINREP_H_
#define MINREP_MINREP_H_

#include <stddef.h>

#if defined(_WIN32)
#define MINREP_API __declspec(dllexport)
#else
#define MINREP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum minrep_status {
  MINREP_OK = 0,
  MINREP_ERR_ARGUMENT = 1,   /* null handle or output pointer */
  MINREP_ERR_INPUT = 2,      /* malformed text, invalid model spec, bad sector label */
  MINREP_ERR_IO = 3,         /* file could not be read or written */
  MINREP_ERR_CAPABILITY = 4, /* instance exceeds an oracle size cap */
  MINREP_ERR_INTERNAL = 5
} minrep_status;

typedef struct minrep_hamiltonian minrep_hamiltonian;
typedef struct minrep_result minrep_result;

MINREP_API const char* minrep_last_error(void);
MINREP_API void minrep_string_free(char* s);

/* Hamiltonians in the line-oriented text format ("qubits n", "<coeff> <paulis>",
 * "offset v"). */
MINREP_API minrep_status minrep_hamiltonian_parse(const char* text, minrep_hamiltonian** out);
MINREP_API minrep_status minrep_hamiltonian_load(const char* path, minrep_hamiltonian** out);
/* kind: "z2", "hubbard", "kitaev" or "j1j2" (rows is the chain length).
 * params: NULL or "name=value" pairs separated by commas. */
MINREP_API minrep_status minrep_hamiltonian_generate(const char* kind, size_t rows, size_t cols,
                                                     int with_field, const char* params,
                                                     minrep_hamiltonian** out);
MINREP_API minrep_status minrep_hamiltonian_to_string(const minrep_hamiltonian* h, char** out);
MINREP_API size_t minrep_hamiltonian_qubits(const minrep_hamiltonian* h);
MINREP_API size_t minrep_hamiltonian_num_terms(const minrep_hamiltonian* h);
MINREP_API void minrep_hamiltonian_free(minrep_hamiltonian* h);

MINREP_API minrep_status minrep_reduce(const minrep_hamiltonian* h, minrep_result** out);
MINREP_API minrep_status minrep_result_from_json(const char* json, minrep_result** out);
MINREP_API minrep_status minrep_result_counts(const minrep_result* res, size_t* n, size_t* r,
                                              size_t* c, size_t* active);
MINREP_API minrep_status minrep_result_report_json(const minrep_result* res, char** out);
MINREP_API minrep_status minrep_result_circuit_text(const minrep_result* res, char** out);
MINREP_API void minrep_result_free(minrep_result* res);

/* z_bits: c characters from {'0','1'}; bit j selects the eigenvalue (-1)^z_j of
 * the j-th reduced charge. */
MINREP_API minrep_status minrep_sector(const minrep_result* res, const char* z_bits,
                                       minrep_hamiltonian** out);

/* Runs the dense checks on h. res may be NULL, in which case h is reduced
 * first. cap_n of 0 keeps the default verification cap. *all_pass is 1 when
 * every check and the optimality comparison pass. */
MINREP_API minrep_status minrep_verify(const minrep_hamiltonian* h, const minrep_result* res,
                                       size_t cap_n, char** json_out, int* all_pass);

/* Regenerates the benchmark table. chem_path may be NULL. *mismatches counts
 * rows whose measured values differ from the reference values. */
MINREP_API minrep_status minrep_table(const char* chem_path, char** text_out, size_t* mismatches);

#ifdef __cplusplus
}
#endif

#endif /* MINREP_MINREP_H_ */
