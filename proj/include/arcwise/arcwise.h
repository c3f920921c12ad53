/*
 * Copyright 2026 The Arcwise Authors
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
 * C interface to libarcwise: turn self-intersecting paths into arcs.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns an arcw_status; on failure arcw_last_error() holds a
 * human-readable message for the calling thread until its next failing call.
 * Strings returned through `char**` are owned by the caller and released
 * with arcw_string_free. Documents are the JSON formats described in the
 * README; all numbers in them are exact rational strings "p/q".
 */

#ifndef ARCWISE_H
#define ARCWISE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ARCWISE_BUILDING)
#    define ARCW_API __declspec(dllexport)
#  else
#    define ARCW_API __declspec(dllimport)
#  endif
#else
#  define ARCW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum arcw_status {
    ARCW_OK = 0,
    ARCW_E_INVALID_ARGUMENT = 1,
    ARCW_E_PARSE = 2,
    ARCW_E_OVERLAP = 3,
    ARCW_E_NOT_A_LOOP = 4,
    ARCW_E_ENDPOINT_MISMATCH = 5,
    ARCW_E_NOT_COLLAPSIBLE = 6,
    ARCW_E_NOT_A_CHAIN = 7,
    ARCW_E_PREMISE_FAILED = 8,
    ARCW_E_IS_LOOP = 9,
    ARCW_E_PATH_MISMATCH = 10,
    ARCW_E_OFF_GRID = 11,
    ARCW_E_INTERNAL = 12,
    ARCW_E_NULL_ARGUMENT = 13
} arcw_status;

typedef enum arcw_ordering {
    ARCW_LESS = 0,
    ARCW_GREATER = 1,
    ARCW_EQUAL = 2,
    ARCW_INCOMPARABLE = 3
} arcw_ordering;

typedef enum arcw_verdict {
    ARCW_PERMITS = 0,
    ARCW_VIOLATED = 1
} arcw_verdict;

typedef struct arcw_path arcw_path;
typedef struct arcw_family arcw_family;
typedef struct arcw_cancellation arcw_cancellation;
typedef struct arcw_extraction arcw_extraction;

ARCW_API const char* arcw_version(void);
ARCW_API const char* arcw_last_error(void);
ARCW_API const char* arcw_status_name(arcw_status status);
ARCW_API void arcw_string_free(char* s);

/* Paths */
ARCW_API arcw_status arcw_path_from_json(const char* json, arcw_path** out);
ARCW_API arcw_status arcw_path_to_json(const arcw_path* path, char** out);
ARCW_API arcw_status arcw_path_is_loop(const arcw_path* path, int* out);
/* Point at parameter t ("p/q"), rendered as "(x, y)" or as the label. */
ARCW_API arcw_status arcw_path_eval(const arcw_path* path, const char* t, char** out);
ARCW_API arcw_status arcw_path_breakpoint_count(const arcw_path* path, size_t* out);
/* {"points":[[s,t],...],"segments":[[[s0,t0],[s1,t1]],...]} */
ARCW_API arcw_status arcw_path_coincidence_json(const arcw_path* path, char** out);
/* *found = 0 when injective; otherwise *pair_json = ["x","y"]. */
ARCW_API arcw_status arcw_path_injectivity_witness(const arcw_path* path, int* found, char** pair_json);
ARCW_API arcw_status arcw_path_reparam_equivalent(const arcw_path* a, const arcw_path* b, int* out);
ARCW_API void arcw_path_free(arcw_path* path);

/* Interval families (unvalidated cancellation documents) */
ARCW_API arcw_status arcw_family_from_json(const char* json, arcw_family** out);
ARCW_API arcw_status arcw_family_compare(const arcw_family* u, const arcw_family* v, arcw_ordering* out);
ARCW_API void arcw_family_free(arcw_family* family);

/* Loop-cancellations bound to one path */
ARCW_API arcw_status arcw_cancellation_validate(const arcw_path* path, const arcw_family* family,
                                                arcw_cancellation** out);
ARCW_API arcw_status arcw_cancellation_is_collapsible(const arcw_cancellation* lc, int* out);
/* Fails with ARCW_E_NOT_COLLAPSIBLE when no reduction exists. */
ARCW_API arcw_status arcw_cancellation_reduction_injective(const arcw_path* path,
                                                           const arcw_cancellation* lc, int* out);
ARCW_API arcw_status arcw_cancellation_maximalize(const arcw_path* path, const arcw_cancellation* seed,
                                                  arcw_cancellation** out);
ARCW_API arcw_status arcw_cancellation_to_json(const arcw_cancellation* lc, char** out);
ARCW_API void arcw_cancellation_free(arcw_cancellation* lc);

/* Arc extraction */
ARCW_API arcw_status arcw_extract(const arcw_path* path, arcw_extraction** out);
ARCW_API arcw_status arcw_extraction_arc_json(const arcw_extraction* ex, char** out);
ARCW_API arcw_status arcw_extraction_cancellation_json(const arcw_extraction* ex, char** out);
/* "null" for loop inputs, which have no collapsing map. */
ARCW_API arcw_status arcw_extraction_map_json(const arcw_extraction* ex, char** out);
/* {"arc":...,"cancellation":...,"collapsing_map":...} */
ARCW_API arcw_status arcw_extraction_document_json(const arcw_extraction* ex, char** out);
/* Recomputes every verdict from `input` and the extraction. */
ARCW_API arcw_status arcw_extraction_report(const arcw_path* input, const arcw_extraction* ex,
                                            double elapsed_ms, int as_json, int* verified, char** out);
ARCW_API arcw_status arcw_extraction_svg(const arcw_path* input, const arcw_extraction* ex, char** out);
ARCW_API void arcw_extraction_free(arcw_extraction* ex);

/* Loop-deletion check over {"pairs":[[a,b],...]}, innermost pair first. */
ARCW_API arcw_status arcw_loop_deletion_witness(const arcw_path* path, const char* pairs_json,
                                                arcw_verdict* out);

/* Cantor staircase through `depth` stages; svg may be NULL. */
ARCW_API arcw_status arcw_cantor_map(unsigned depth, char** map_json, char** svg);

/*
 * Fixtures: kind is one of retrace, figure_eight, lasso, nested_discrete,
 * quotient, random_polyline, random_discrete. pairs_json may be NULL; it
 * receives the identified pairs for quotient fixtures and "null" otherwise.
 */
typedef struct arcw_fixture_spec {
    const char* kind;
    uint64_t seed;
    size_t size;
    size_t loops;
    size_t alphabet;
    unsigned depth;
    int generic;
} arcw_fixture_spec;

ARCW_API arcw_status arcw_generate(const arcw_fixture_spec* spec, char** path_json, char** pairs_json);

#ifdef __cplusplus
}
#endif

#endif /* ARCWISE_H */
