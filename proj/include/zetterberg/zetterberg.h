/**************************************************************************
 * zetterberg.h
 *
 * Copyright 2026 The zetterberg authors
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
 **************************************************************************/
#ifndef ZETTERBERG_H
#define ZETTERBERG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ZT_BUILDING_LIBRARY)
#    define ZT_API __declspec(dllexport)
#  else
#    define ZT_API __declspec(dllimport)
#  endif
#else
#  define ZT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zt_status {
    ZT_OK = 0,
    ZT_ERR_INVALID_ARGUMENT = 1,
    ZT_ERR_SIZE_CAP = 2,
    ZT_ERR_DIVISION_BY_ZERO = 3,
    ZT_ERR_EVEN_CHARACTERISTIC = 4,
    ZT_ERR_PRECONDITION = 5,
    ZT_ERR_FORMULA_MISMATCH = 6,
    ZT_ERR_NOT_FOUND = 7,
    ZT_ERR_HALF_NEEDS_ODD_Q0 = 8,
    ZT_ERR_LENGTH_MISMATCH = 9,
    ZT_ERR_UNDECIDABLE = 10,
    ZT_ERR_INCONSISTENT = 11,
    ZT_ERR_INTERNAL = 12
} zt_status;

typedef enum zt_variant { ZT_VARIANT_FULL = 0, ZT_VARIANT_HALF = 1 } zt_variant;

typedef enum zt_strategy {
    ZT_STRATEGY_AUTO = 0,
    ZT_STRATEGY_ORACLE = 1,
    ZT_STRATEGY_CRITERION = 2,
    ZT_STRATEGY_SHORTCUT = 3,
    ZT_STRATEGY_VERIFY = 4
} zt_strategy;

typedef enum zt_parity { ZT_PARITY_ODD = 0, ZT_PARITY_EVEN = 1 } zt_parity;

typedef enum zt_format { ZT_FORMAT_JSON = 0, ZT_FORMAT_CSV = 1, ZT_FORMAT_MARKDOWN = 2 } zt_format;

typedef enum zt_subgroup { ZT_SUBGROUP_H = 0, ZT_SUBGROUP_FQ_STAR = 1, ZT_SUBGROUP_FQ0_STAR = 2 } zt_subgroup;

/* Opaque handles. */
typedef struct zt_caps zt_caps;
typedef struct zt_field zt_field;
typedef struct zt_code zt_code;

/* Library version string, e.g. "1.0.0". */
ZT_API const char* zt_version(void);
ZT_API const char* zt_status_name(zt_status status);
/* Message of the last failed call on this thread; never NULL. */
ZT_API const char* zt_last_error(void);
/* Frees strings returned through char** out-parameters. */
ZT_API void zt_string_free(char* s);

/* Caps: defaults, then optional overrides. NULL caps means defaults. */
ZT_API zt_status zt_caps_new(zt_caps** out);
ZT_API zt_status zt_caps_from_environment(zt_caps** out);
ZT_API zt_status zt_caps_load_file(zt_caps* caps, const char* path);
ZT_API zt_status zt_caps_set(zt_caps* caps, const char* key, uint64_t value);
ZT_API zt_status zt_caps_get(const zt_caps* caps, const char* key, uint64_t* out);
ZT_API void zt_caps_free(zt_caps* caps);

/* Ambient field F_{p^(2sm)}. */
ZT_API zt_status zt_field_new(uint32_t p, unsigned m, unsigned s, const zt_caps* caps, zt_field** out);
ZT_API void zt_field_free(zt_field* field);
ZT_API zt_status zt_field_order(const zt_field* field, uint64_t* out);
ZT_API zt_status zt_field_subgroup_order(const zt_field* field, zt_subgroup which, uint64_t* out);
ZT_API zt_status zt_field_to_json(const zt_field* field, int dump, char** out);

/* Codes. */
ZT_API zt_status zt_code_new(uint64_t q0, unsigned s, zt_variant variant, const zt_caps* caps, zt_code** out);
ZT_API void zt_code_free(zt_code* code);
ZT_API zt_status zt_code_length(const zt_code* code, uint64_t* out);
ZT_API zt_status zt_code_dimension(const zt_code* code, uint64_t* out);
/* *defined is 0 for the zero-dimensional half code at q0 = 3, s = 1. */
ZT_API zt_status zt_min_distance_formula(uint64_t q0, unsigned s, zt_variant variant, int* out, int* defined);
/* *found is 0 when no nonzero word of weight <= max_weight exists.
   witness_json may be NULL. */
ZT_API zt_status zt_code_min_distance_exhaustive(const zt_code* code, int max_weight, int* out, int* found,
                                                 char** witness_json);

/* Covering radius report as JSON; timing = 0 drops elapsed_ms. */
ZT_API zt_status zt_radius(uint64_t q0, unsigned s, zt_strategy strategy, const zt_caps* caps, int timing,
                           char** out);

/* Threshold table over prime powers up to q0_max (JSON or CSV). */
ZT_API zt_status zt_thresholds(zt_parity parity, uint64_t q0_max, zt_format format, char** out);

/* Classification sweep over s = 1..s_max (JSON, CSV or Markdown). */
ZT_API zt_status zt_classify(uint64_t q0, unsigned s_max, zt_variant variant, const zt_caps* caps,
                             zt_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
