#ifndef GOURSAT_H
#define GOURSAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GS_API __declspec(dllexport)
#else
#define GS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
  GS_OK = 0,
  GS_EMPTY_WORD = 1,
  GS_BAD_SYMBOL = 2,
  GS_LEADING_CRITICAL = 3,
  GS_ORPHAN_T = 4,
  GS_NOT_GOURSAT = 5,
  GS_TOO_SHORT = 6,
  GS_UNSUPPORTED = 7,
  GS_INVALID_INPUT = 8,
  GS_NON_MONOTONE = 9,
  GS_INVALID_PC = 10,
  GS_NOT_REALIZABLE = 11,
  GS_MISSING_M0 = 12,
  GS_ROUTE_MISMATCH = 13,
  GS_INDEX_RANGE = 14,
  GS_VARIABLE_MISMATCH = 15,
  GS_NON_EXACT_DIVISION = 16,
  GS_STEP_BUDGET_EXCEEDED = 17,
  GS_TRUNCATION_TOO_SMALL = 18,
  GS_ORDER_MISMATCH = 19,
  GS_RESOURCE_BUDGET = 20,
  GS_NULL_ARGUMENT = 21,
  GS_INTERNAL = 22
} gs_status;

typedef enum gs_format { GS_FORMAT_TEXT = 0, GS_FORMAT_JSON = 1, GS_FORMAT_DOT = 2 } gs_format;

typedef struct gs_word gs_word;
typedef struct gs_bundle gs_bundle;

typedef struct gs_verify_options {
  size_t depth;  /* 0 selects the degree of nonholonomy + 2 */
  uint64_t seed;
  int symbolic;
} gs_verify_options;

/* Strings returned through char** are owned by the caller and released
   with gs_string_free. On failure the out pointer is left untouched and
   gs_last_error describes the problem (per thread). */

GS_API gs_status gs_word_parse(const char* text, gs_word** out);
GS_API void gs_word_free(gs_word* word);
GS_API gs_status gs_word_string(const gs_word* word, char** out);
GS_API gs_status gs_word_length(const gs_word* word, size_t* out);
GS_API gs_status gs_word_is_goursat(const gs_word* word, int* out);
GS_API gs_status gs_word_normalize(const gs_word* word, gs_word** out);
GS_API gs_status gs_word_lift(const gs_word* word, gs_word** out);
/* One word per line, from the word itself down to R. */
GS_API gs_status gs_word_lift_chain(const gs_word* word, char** out);
/* Every Goursat word of the given length, one per line. */
GS_API gs_status gs_goursat_words(size_t length, char** out);

/* Non-Goursat words get m0 from the focal orders at the canonical point. */
GS_API gs_status gs_bundle_compute(const gs_word* word, gs_bundle** out);
GS_API gs_status gs_bundle_from_json(const char* json, gs_bundle** out);
GS_API void gs_bundle_free(gs_bundle* bundle);
GS_API gs_status gs_bundle_render(const gs_bundle* bundle, gs_format format, char** out);
GS_API gs_status gs_bundle_equal(const gs_bundle* a, const gs_bundle* b, int* out);
GS_API gs_status gs_bundle_etable(const gs_bundle* bundle, char** out);

/* GS_FORMAT_TEXT or GS_FORMAT_DOT; the word must be Goursat. */
GS_API gs_status gs_render_proximity(const gs_word* word, gs_format format, char** out);
GS_API gs_status gs_render_chart(const gs_word* word, gs_format format, char** out);
/* Chart words over {o, i}, e.g. "ooioii". */
GS_API gs_status gs_render_bracket_table(const char* chart, char** out);
GS_API gs_status gs_render_puiseux(const gs_word* word, gs_format format, char** out);
/* Multiplicity sequence of a characteristic written "[6;8,9]", by the
   Euclid expansion and checked against blowups. */
GS_API gs_status gs_pc_multseq(const char* pc, gs_format format, char** out);

/* *passed is 1 when every check holds. The report is always produced when
   the status is GS_OK. */
GS_API gs_status gs_verify(const gs_word* word, const gs_verify_options* options, gs_format format,
                           int* passed, char** report);

GS_API const char* gs_last_error(void);
GS_API size_t gs_last_error_position(void);
GS_API const char* gs_status_name(gs_status status);
GS_API void gs_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
