// Copyright 2026 The bpfree Authors
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

#ifndef BPFREE_BPFREE_H_
#define BPFREE_BPFREE_H_

/* C interface to the bpfree library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a bpfree_status; on failure a message for the
 * calling thread is available from bpfree_last_error(). Strings returned
 * through char** are heap-allocated and released with bpfree_string_free().
 * Rationals are passed as decimal strings "p", "p/q" or "1.25". */

#include <stddef.h>

#if defined(BPFREE_BUILDING_LIBRARY)
#define BPFREE_API __attribute__((visibility("default")))
#else
#define BPFREE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bpfree_status {
  BPFREE_OK = 0,
  BPFREE_ERR_INVALID_ARGUMENT = 1, /* null handle, bad index, invalid chain */
  BPFREE_ERR_PARSE = 2,            /* malformed text input */
  BPFREE_ERR_DOMAIN = 3,           /* argument outside the mathematical domain */
  BPFREE_ERR_GUARD = 4,            /* size guard exceeded */
  BPFREE_ERR_CERTIFICATION = 5,    /* a certified evaluation could not conclude */
  BPFREE_ERR_INTERNAL = 6
} bpfree_status;

typedef enum bpfree_format { BPFREE_FORMAT_CSV = 0, BPFREE_FORMAT_JSON = 1, BPFREE_FORMAT_TEXT = 2 } bpfree_format;

/* Result of a certified comparison or verdict. */
enum { BPFREE_UNDECIDED = -2 };

typedef struct bpfree_radsum bpfree_radsum;
typedef struct bpfree_solve_result bpfree_solve_result;
typedef struct bpfree_table bpfree_table;
typedef struct bpfree_bound_report bpfree_bound_report;
typedef struct bpfree_verify_report bpfree_verify_report;

typedef struct bpfree_bound_options {
  unsigned long precision;   /* bits, >= 16 */
  int with_construction;     /* nonzero: include the explicit lower construction */
  unsigned long solve_limit; /* F is computed only for n <= solve_limit */
} bpfree_bound_options;

BPFREE_API const char* bpfree_version(void);
BPFREE_API const char* bpfree_status_name(bpfree_status status);
/* Message of the last failed call on this thread ("" if none). */
BPFREE_API const char* bpfree_last_error(void);
BPFREE_API void bpfree_string_free(char* s);

/* Exact radical sums. */
BPFREE_API bpfree_status bpfree_radsum_parse(const char* text, bpfree_radsum** out);
BPFREE_API bpfree_status bpfree_radsum_radical(const char* coeff, const char* radicand, unsigned long index,
                                               bpfree_radsum** out);
BPFREE_API void bpfree_radsum_free(bpfree_radsum* a);
BPFREE_API bpfree_status bpfree_radsum_add(const bpfree_radsum* a, const bpfree_radsum* b, bpfree_radsum** out);
BPFREE_API bpfree_status bpfree_radsum_scale(const char* q, const bpfree_radsum* a, bpfree_radsum** out);
/* *out is -1, 0 or 1. */
BPFREE_API bpfree_status bpfree_radsum_compare(const bpfree_radsum* a, const bpfree_radsum* b, int* out);
BPFREE_API bpfree_status bpfree_radsum_equal(const bpfree_radsum* a, const bpfree_radsum* b, int* out);
BPFREE_API bpfree_status bpfree_radsum_floor(const bpfree_radsum* a, char** out);
BPFREE_API bpfree_status bpfree_radsum_to_string(const bpfree_radsum* a, char** out);
/* Decimal endpoints, rounded outward. */
BPFREE_API bpfree_status bpfree_radsum_enclose(const bpfree_radsum* a, unsigned long precision, char** lo, char** hi);

/* Principal-branch Lambert W of a rational x >= 0, or of e when x is "e". */
BPFREE_API bpfree_status bpfree_lambert_w(const char* x, unsigned long precision, char** lo, char** hi);
BPFREE_API bpfree_status bpfree_lambert_w_render(const char* x, unsigned long precision, bpfree_format format,
                                                 char** out);

/* Maximum of f over integral chains. bruteforce != 0 uses exhaustive search (n <= 8). */
BPFREE_API bpfree_status bpfree_solve_f(unsigned long n, unsigned long r, int bruteforce, bpfree_solve_result** out);
/* Certified upper candidate for G(n). */
BPFREE_API bpfree_status bpfree_solve_g(unsigned long n, bpfree_solve_result** out);
BPFREE_API void bpfree_solve_result_free(bpfree_solve_result* result);
BPFREE_API bpfree_status bpfree_solve_result_value(const bpfree_solve_result* result, bpfree_radsum** out);
BPFREE_API bpfree_status bpfree_solve_result_floor(const bpfree_solve_result* result, char** out);
BPFREE_API bpfree_status bpfree_solve_result_witness(const bpfree_solve_result* result, char** out);
BPFREE_API bpfree_status bpfree_solve_result_render(const bpfree_solve_result* result, bpfree_format format,
                                                    char** out);

/* Floors of F(n, r) for n = 2..n_max and each listed r. */
BPFREE_API bpfree_status bpfree_table_build(unsigned long n_max, const unsigned long* r_values, size_t r_count,
                                            bpfree_table** out);
BPFREE_API void bpfree_table_free(bpfree_table* table);
BPFREE_API size_t bpfree_table_size(const bpfree_table* table);
BPFREE_API bpfree_status bpfree_table_cell(const bpfree_table* table, size_t i, unsigned long* n, unsigned long* r,
                                           long* floor_value);
BPFREE_API bpfree_status bpfree_table_render(const bpfree_table* table, bpfree_format format, char** out);

BPFREE_API void bpfree_bound_options_init(bpfree_bound_options* options);
BPFREE_API bpfree_status bpfree_bounds_build(unsigned long n, unsigned long r, const bpfree_bound_options* options,
                                             bpfree_bound_report** out);
BPFREE_API void bpfree_bounds_free(bpfree_bound_report* report);
BPFREE_API size_t bpfree_bounds_count(const bpfree_bound_report* report);
/* *dominates is 1, 0 or BPFREE_UNDECIDED. *name stays valid while the report lives. */
BPFREE_API bpfree_status bpfree_bounds_entry(const bpfree_bound_report* report, size_t i, const char** name,
                                             int* is_upper, int* dominates);
BPFREE_API bpfree_status bpfree_bounds_render(const bpfree_bound_report* report, bpfree_format format, char** out);
/* Plot-ready rows for n = 2..n_max. */
BPFREE_API bpfree_status bpfree_bounds_sweep(unsigned long n_max, unsigned long r, const bpfree_bound_options* options,
                                             bpfree_format format, char** out);

/* Suites: table1, sixfold, bounds, oracle, appendix. */
BPFREE_API bpfree_status bpfree_verify_run(const char* suite, unsigned long precision, bpfree_verify_report** out);
BPFREE_API void bpfree_verify_free(bpfree_verify_report* report);
BPFREE_API int bpfree_verify_passed(const bpfree_verify_report* report);
BPFREE_API size_t bpfree_verify_count(const bpfree_verify_report* report);
BPFREE_API bpfree_status bpfree_verify_check(const bpfree_verify_report* report, size_t i, const char** name,
                                             int* passed);
BPFREE_API bpfree_status bpfree_verify_render(const bpfree_verify_report* report, bpfree_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* BPFREE_BPFREE_H_ */
