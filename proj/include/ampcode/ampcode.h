// Copyright 2026 The ampcode Authors
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

#ifndef AMPCODE_AMPCODE_H_
#define AMPCODE_AMPCODE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(AMPC_BUILDING_LIBRARY)
#define AMPC_API __attribute__((visibility("default")))
#else
#define AMPC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ampc_code ampc_code;
typedef struct ampc_report ampc_report;

typedef enum {
  AMPC_OK = 0,
  AMPC_ERR_INVALID_ARGUMENT = 1,
  AMPC_ERR_PARSE = 2,
  AMPC_ERR_NORMALIZATION = 3,
  AMPC_ERR_STRUCTURE = 4,
  AMPC_ERR_DOMAIN = 5,
  AMPC_ERR_CONSTRUCTION = 6,
  AMPC_ERR_CRITERIA = 7,
  AMPC_ERR_NOT_FOUND = 8,
  AMPC_ERR_IO = 9,
  AMPC_ERR_INTERNAL = 10
} ampc_status;

typedef enum { AMPC_FORMAT_TEXT = 0, AMPC_FORMAT_JSON = 1 } ampc_format;

typedef enum {
  AMPC_VARIANT_PREFERRED = 0,
  AMPC_VARIANT_AS_PRINTED = 1,
  AMPC_VARIANT_CORRECTED = 2
} ampc_variant;

/* Library version, "major.minor.patch". */
AMPC_API const char* ampc_version(void);
/* Message for the last failed call on this thread; "" if none. */
AMPC_API const char* ampc_last_error(void);
AMPC_API const char* ampc_status_name(ampc_status status);

/* Codes. Strings returned through char** are freed with ampc_string_free. */
AMPC_API ampc_status ampc_code_parse(const char* text, ampc_code** out);
AMPC_API ampc_status ampc_code_load(const char* path, ampc_code** out);
AMPC_API ampc_status ampc_code_from_catalog(int id, ampc_variant variant, ampc_code** out);
AMPC_API void ampc_code_free(ampc_code* code);
AMPC_API ampc_status ampc_code_serialize(const ampc_code* code, char** out);
AMPC_API ampc_status ampc_code_descriptor(const ampc_code* code, char** out);
AMPC_API unsigned ampc_code_design_t(const ampc_code* code);
AMPC_API size_t ampc_code_codeword_count(const ampc_code* code);
/* Parser warnings attached to the code (header N or d disagreeing, etc.). */
AMPC_API size_t ampc_code_warning_count(const ampc_code* code);
AMPC_API const char* ampc_code_warning(const ampc_code* code, size_t index);
AMPC_API void ampc_string_free(char* text);

typedef struct {
  int t;             /* < 0: the code's design t */
  int numeric;       /* nonzero: floating-point check at `gamma` */
  const char* gamma; /* rational or decimal text; NULL means 1/10 */
  double tolerance;
  int timings;
} ampc_verify_options;

AMPC_API void ampc_verify_options_init(ampc_verify_options* options);
AMPC_API ampc_status ampc_verify(const ampc_code* code, const ampc_verify_options* options, ampc_report** out);

/* t < 0 selects the design t; gamma may be NULL. */
AMPC_API ampc_status ampc_fidelity(const ampc_code* code, int t, const char* gamma, ampc_report** out);
AMPC_API ampc_status ampc_rate(const ampc_code* code, ampc_report** out);
AMPC_API ampc_status ampc_bound(unsigned l_o, unsigned t, unsigned m, ampc_report** out);
AMPC_API ampc_status ampc_optimal_t(const char* gamma, double f, double alpha, unsigned l_o, ampc_report** out);

typedef struct {
  int t;
  const char* gamma;
  uint64_t shots;
  uint64_t seed;
  const double* coefficients; /* NULL: |c_0> */
  size_t coefficient_count;
  unsigned threads;
  int timings;
} ampc_simulate_options;

AMPC_API void ampc_simulate_options_init(ampc_simulate_options* options);
AMPC_API ampc_status ampc_simulate(const ampc_code* code, const ampc_simulate_options* options, ampc_report** out);

/* Construction reports carry the code file as their payload. */
AMPC_API ampc_status ampc_construct_t1(unsigned n, unsigned m, unsigned d, ampc_report** out);
AMPC_API ampc_status ampc_construct_t2(const unsigned* x, size_t m, unsigned d, ampc_report** out);
AMPC_API ampc_status ampc_construct_weights(const char* supports_text, unsigned t, ampc_report** out);

AMPC_API ampc_status ampc_catalog_list(ampc_report** out);
AMPC_API ampc_status ampc_catalog_show(int id, ampc_variant variant, ampc_report** out);
AMPC_API ampc_status ampc_catalog_verify_all(ampc_report** out);

AMPC_API int ampc_report_passed(const ampc_report* report);
AMPC_API ampc_status ampc_report_render(const ampc_report* report, ampc_format format, char** out);
AMPC_API ampc_status ampc_report_payload(const ampc_report* report, char** out);
AMPC_API void ampc_report_free(ampc_report* report);

#ifdef __cplusplus
}
#endif

#endif  // AMPCODE_AMPCODE_H_
