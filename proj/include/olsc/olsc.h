/* Copyright 2026 The olsc Authors
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

/* C interface to the olsc pulse compiler.
 *
 * Objects are opaque handles released with their *_free function. Functions
 * return an olsc_status; on anything but OLSC_OK, olsc_last_error() describes
 * the failure on the calling thread. Strings handed out through char** are
 * allocated by the library and released with olsc_string_free. */

#ifndef OLSC_OLSC_H_
#define OLSC_OLSC_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(OLSC_BUILDING_LIBRARY)
#define OLSC_API __declspec(dllexport)
#else
#define OLSC_API __declspec(dllimport)
#endif
#else
#define OLSC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum olsc_status {
  OLSC_OK = 0,
  OLSC_ERR_INVALID_ARGUMENT = 1,
  OLSC_ERR_PARSE = 2,
  /* Routing stopped by the depth cap or node budget. */
  OLSC_ERR_SYNTHESIS = 3,
  /* A maximal set could not be made a hypercube path by label exchanges. */
  OLSC_ERR_UNREPAIRABLE = 4,
  OLSC_ERR_OUT_OF_RANGE = 5,
  OLSC_ERR_INTERNAL = 6,
  /* Enumeration finished; not an error. */
  OLSC_DONE = 7
} olsc_status;

typedef enum olsc_topology_kind {
  OLSC_TOPOLOGY_CHAIN = 0,
  OLSC_TOPOLOGY_HYPERCUBE = 1
} olsc_topology_kind;

typedef enum olsc_scheme_kind {
  OLSC_SCHEME_CONVENTIONAL = 0,
  OLSC_SCHEME_GRAY = 1,
  OLSC_SCHEME_GRAY_REFLECTED = 2,
  /* Optimal: chain placement, or pair swaps with a path fallback. */
  OLSC_SCHEME_OLS = 3,
  /* Hypercube pair-swap repair only. */
  OLSC_SCHEME_PAIRSWAP = 4
} olsc_scheme_kind;

typedef struct olsc_permutation olsc_permutation;
typedef struct olsc_topology olsc_topology;
typedef struct olsc_scheme olsc_scheme;
typedef struct olsc_sequence olsc_sequence;
typedef struct olsc_verdict olsc_verdict;
typedef struct olsc_enumerator olsc_enumerator;

OLSC_API const char* olsc_version(void);
OLSC_API const char* olsc_last_error(void);
/* 1-based line of the last parse error, 0 if none. */
OLSC_API size_t olsc_last_error_line(void);
OLSC_API void olsc_string_free(char* s);

/* Operations. */
OLSC_API olsc_status olsc_permutation_parse(const char* text, olsc_permutation** out);
/* n_qubits = 0 lets the name decide. */
OLSC_API olsc_status olsc_permutation_builtin(const char* name, int n_qubits,
                                              olsc_permutation** out);
OLSC_API olsc_status olsc_permutation_from_map(int n_qubits, const uint32_t* map,
                                               size_t len, olsc_permutation** out);
/* first, then second. */
OLSC_API olsc_status olsc_permutation_compose(const olsc_permutation* first,
                                              const olsc_permutation* second,
                                              olsc_permutation** out);
OLSC_API olsc_status olsc_permutation_apply(const olsc_permutation* p, uint32_t state,
                                            uint32_t* out);
OLSC_API int olsc_permutation_qubits(const olsc_permutation* p);
OLSC_API olsc_status olsc_permutation_format(const olsc_permutation* p, char** out);
OLSC_API void olsc_permutation_free(olsc_permutation* p);

OLSC_API olsc_status olsc_maximal_sets_format(const olsc_permutation* p, char** out);
OLSC_API olsc_status olsc_min_pulse_count(const olsc_permutation* p, size_t* out);
/* Decimal string, exact. */
OLSC_API olsc_status olsc_count_optimal_labelings(const olsc_permutation* p,
                                                  char** out);

/* Topologies. */
OLSC_API olsc_status olsc_topology_new(olsc_topology_kind kind, int n_qubits,
                                       olsc_topology** out);
OLSC_API size_t olsc_topology_edge_count(const olsc_topology* t);
OLSC_API olsc_status olsc_topology_distance(const olsc_topology* t, uint32_t a,
                                            uint32_t b, int* out);
OLSC_API void olsc_topology_free(olsc_topology* t);

/* Labeling schemes. p may be NULL for conventional and Gray schemes. */
OLSC_API olsc_status olsc_scheme_new(const olsc_topology* t, const olsc_permutation* p,
                                     olsc_scheme_kind kind, olsc_scheme** out);
/* Conventional labeling with labels swaps[2i] and swaps[2i+1] exchanged. */
OLSC_API olsc_status olsc_scheme_pairswap_explicit(const olsc_topology* t,
                                                   const olsc_permutation* p,
                                                   const uint32_t* swaps,
                                                   size_t n_pairs, olsc_scheme** out);
/* Labeling table; chains are path-placed when they happen to be paths. */
OLSC_API olsc_status olsc_scheme_parse(const olsc_topology* t, const olsc_permutation* p,
                                       const char* text, olsc_scheme** out);
OLSC_API olsc_status olsc_scheme_format(const olsc_scheme* s, char** out);
OLSC_API const char* olsc_scheme_provenance(const olsc_scheme* s);
OLSC_API void olsc_scheme_free(olsc_scheme* s);

/* Synthesis. depth_cap = 0 uses the default cap. */
OLSC_API olsc_status olsc_synthesize(const olsc_permutation* p, const olsc_scheme* s,
                                     size_t depth_cap, olsc_sequence** out);
OLSC_API olsc_status olsc_sequence_schedule(const olsc_sequence* in, olsc_sequence** out);
OLSC_API olsc_status olsc_sequence_parse(const olsc_scheme* s, const char* text,
                                         olsc_sequence** out);
OLSC_API olsc_status olsc_sequence_format(const olsc_sequence* seq, char** out);
OLSC_API size_t olsc_sequence_length(const olsc_sequence* seq);
OLSC_API size_t olsc_sequence_rounds(const olsc_sequence* seq);
OLSC_API void olsc_sequence_free(olsc_sequence* seq);

/* Verification. */
OLSC_API olsc_status olsc_verify(const olsc_sequence* seq, const olsc_permutation* p,
                                 const olsc_scheme* s, olsc_verdict** out);
OLSC_API int olsc_verdict_passed(const olsc_verdict* v);
OLSC_API olsc_status olsc_verdict_format(const olsc_verdict* v, char** out);
OLSC_API void olsc_verdict_free(olsc_verdict* v);

/* Stick spectrum. p = NULL gives the equilibrium spectrum; ascii != 0 appends
 * a stick plot. */
OLSC_API olsc_status olsc_spectrum_format(const olsc_scheme* s, const olsc_permutation* p,
                                          int ascii, char** out);

/* Optimal chain labelings, one at a time. */
OLSC_API olsc_status olsc_enumerator_new(const olsc_topology* t, const olsc_permutation* p,
                                         olsc_enumerator** out);
/* OLSC_OK with a new scheme, or OLSC_DONE with *out = NULL. */
OLSC_API olsc_status olsc_enumerator_next(olsc_enumerator* e, olsc_scheme** out);
OLSC_API void olsc_enumerator_free(olsc_enumerator* e);

#ifdef __cplusplus
}
#endif

#endif /* OLSC_OLSC_H_ */
