/*
 * Copyright 2026 The dga Authors
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
 * C interface of the deformed geometric algebra library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Functions return a dga_status; on failure the
 * out-parameter is left untouched and dga_last_error() describes the
 * problem. Error state is per thread. Strings returned through char** are
 * released with dga_string_free; strings returned through const char** are
 * owned by the handle they came from.
 */

#ifndef DGA_DGA_H
#define DGA_DGA_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(DGA_BUILDING_LIBRARY)
#    define DGA_API __declspec(dllexport)
#  else
#    define DGA_API __declspec(dllimport)
#  endif
#else
#  define DGA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dga_status {
  DGA_OK = 0,
  DGA_ERR_PARSE = 1,            /* syntax or lowering error in an expression */
  DGA_ERR_INVALID_ARGUMENT = 2, /* e.g. a superpotential depending on p */
  DGA_ERR_DIMENSION = 3,        /* generator count mismatch or out of range */
  DGA_ERR_IDENTITY = 4,         /* an identity required at construction failed */
  DGA_ERR_INTERNAL = 5
} dga_status;

typedef enum dga_star_kind {
  DGA_STAR_MOYAL = 0,
  DGA_STAR_CLIFFORD = 1,
  DGA_STAR_MOYAL_CLIFFORD = 2
} dga_star_kind;

typedef enum dga_system_field {
  DGA_FIELD_SUPERPOTENTIAL = 0,
  DGA_FIELD_W = 1,
  DGA_FIELD_H_S = 2,
  DGA_FIELD_H1 = 3,
  DGA_FIELD_H2 = 4,
  DGA_FIELD_Q_PLUS = 5,
  DGA_FIELD_Q_MINUS = 6,
  DGA_FIELD_Q1 = 7,
  DGA_FIELD_Q2 = 8,
  DGA_FIELD_PI_PLUS = 9,
  DGA_FIELD_PI_MINUS = 10
} dga_system_field;

typedef struct dga_poly dga_poly;
typedef struct dga_multivector dga_multivector;
typedef struct dga_system dga_system;
typedef struct dga_report dga_report;

DGA_API const char* dga_version(void);

/* Message of the last failed call on this thread, "" if none. */
DGA_API const char* dga_last_error(void);
/* Byte offset of the last parse error, or (size_t)-1. */
DGA_API size_t dga_last_error_offset(void);

DGA_API void dga_string_free(char* s);

/* Phase-space polynomials over Q(i)[hbar, 1/hbar]. */
DGA_API dga_status dga_poly_parse(const char* src, dga_poly** out);
DGA_API void dga_poly_free(dga_poly* f);
DGA_API dga_status dga_poly_render(const dga_poly* f, char** out);
DGA_API int dga_poly_equal(const dga_poly* f, const dga_poly* g);
DGA_API dga_status dga_poly_mul(const dga_poly* f, const dga_poly* g, dga_poly** out);
DGA_API dga_status dga_poly_moyal_star(const dga_poly* f, const dga_poly* g, dga_poly** out);
DGA_API dga_status dga_poly_moyal_commutator(const dga_poly* f, const dga_poly* g, dga_poly** out);
DGA_API dga_status dga_poly_poisson_bracket(const dga_poly* f, const dga_poly* g, dga_poly** out);

/* Multivectors on dim generators e1..e<dim> with the euclidean metric. */
DGA_API dga_status dga_mv_parse(const char* src, unsigned dim, dga_multivector** out);
DGA_API void dga_mv_free(dga_multivector* a);
DGA_API dga_status dga_mv_render(const dga_multivector* a, char** out);
DGA_API int dga_mv_equal(const dga_multivector* a, const dga_multivector* b);
DGA_API dga_status dga_mv_wedge(const dga_multivector* a, const dga_multivector* b, dga_multivector** out);
DGA_API dga_status dga_mv_clifford_star(const dga_multivector* a, const dga_multivector* b, dga_multivector** out);
DGA_API dga_status dga_mv_moyal_clifford_star(const dga_multivector* a, const dga_multivector* b,
                                              dga_multivector** out);

/* Parses both operands, multiplies, renders. dim is ignored for the Moyal
 * product. */
DGA_API dga_status dga_star(dga_star_kind kind, const char* lhs, const char* rhs, unsigned dim, char** out);

/* Star-factorized supersymmetric system for a q-only superpotential. */
DGA_API dga_status dga_system_create(const char* superpotential, dga_system** out);
DGA_API void dga_system_free(dga_system* sys);
DGA_API dga_status dga_system_render(const dga_system* sys, dga_system_field field, char** out);
DGA_API dga_status dga_system_report(const dga_system* sys, dga_report** out);

/* W-independent identity suites. */
DGA_API dga_status dga_verify_pauli(dga_report** out);
DGA_API dga_status dga_verify_projectors(dga_report** out);
DGA_API dga_status dga_verify_ladder(dga_report** out);
/* Oscillator partner genvalue equations at levels 0..max_level. tamper != 0
 * shifts the expected eigenvalues so every entry fails. */
DGA_API dga_status dga_verify_genvalues(unsigned max_level, int tamper, dga_report** out);

DGA_API size_t dga_report_size(const dga_report* rep);
DGA_API dga_status dga_report_entry(const dga_report* rep, size_t index, const char** name, const char** lhs,
                                    const char** rhs, int* pass);
DGA_API int dga_report_all_pass(const dga_report* rep);
DGA_API void dga_report_free(dga_report* rep);

#ifdef __cplusplus
}
#endif

#endif /* DGA_DGA_H */
