/* C interface to the dilog library.
 *
 * Objects are opaque and owned by the caller once returned; free them with
 * the matching *_free function. Every call returns a dilog_status. When a
 * call fails, dilog_last_error() describes why (thread-local, valid until
 * the next call on the same thread).
 *
 * Computations that run to completion produce a dilog_report: a verdict
 * plus a JSON document. They return DILOG_OK when the check passes,
 * DILOG_CHECK_FAILED or DILOG_NOT_FOUND when it ran but did not pass; the
 * report is produced in all three cases. */
#ifndef DILOG_DILOG_H
#define DILOG_DILOG_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(DILOG_BUILDING_LIBRARY)
#define DILOG_API __declspec(dllexport)
#else
#define DILOG_API __declspec(dllimport)
#endif
#elif defined(__GNUC__)
#define DILOG_API __attribute__((visibility("default")))
#else
#define DILOG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dilog_status {
  DILOG_OK = 0,
  DILOG_CHECK_FAILED = 1,
  DILOG_INVALID_ARGUMENT = 2,
  DILOG_NO_POSITIVE_ROOT = 3,
  DILOG_NOT_FOUND = 4,
  DILOG_PRECISION_EXHAUSTED = 5,
  DILOG_UNKNOWN_NAME = 6,
  DILOG_PARSE_ERROR = 7,
  DILOG_IO_ERROR = 8,
  DILOG_INTERNAL_ERROR = 9
} dilog_status;

typedef enum dilog_parity { DILOG_EVEN = 0, DILOG_ODD = 1 } dilog_parity;

typedef struct dilog_ladder dilog_ladder;
typedef struct dilog_report dilog_report;

DILOG_API const char* dilog_version(void);
DILOG_API const char* dilog_last_error(void);
DILOG_API const char* dilog_status_string(dilog_status status);

/* Ladders. Corpus names accept '-' or '_' interchangeably. */
DILOG_API dilog_status dilog_ladder_from_corpus(const char* name, dilog_ladder** out);
DILOG_API dilog_status dilog_ladder_from_family(dilog_parity parity, int n, dilog_ladder** out);
DILOG_API dilog_status dilog_ladder_from_json(const char* json, dilog_ladder** out);
/* *out is a NUL-terminated string released with dilog_string_free. */
DILOG_API dilog_status dilog_ladder_to_json(const dilog_ladder* ladder, char** out);
DILOG_API void dilog_ladder_free(dilog_ladder* ladder);
DILOG_API void dilog_string_free(char* text);

/* Numeric check at `digits` significant decimals (>= 20): passes iff
 * |residual| < 10^(10 - digits). */
DILOG_API dilog_status dilog_verify_ladder(const dilog_ladder* ladder, int digits, dilog_report** out);

/* Positive root of a polynomial given as comma-separated ascending rational
 * coefficients. With require_unit_interval != 0 a root outside (0, 1) is
 * DILOG_NO_POSITIVE_ROOT. */
DILOG_API dilog_status dilog_root(const char* poly_csv, int digits, int require_unit_interval, dilog_report** out);
DILOG_API dilog_status dilog_root_family(dilog_parity parity, int n, int digits, int require_unit_interval,
                                         dilog_report** out);

/* Exact certification of the family identities modulo the base polynomial. */
DILOG_API dilog_status dilog_verify_exact(dilog_parity parity, int n, dilog_report** out);

/* Integer-relation search among Li2(u^r) for r in exponents, log^2 u and
 * zeta(2). max_norm is a decimal integer string. DILOG_NOT_FOUND comes with
 * an exclusion bound in the report. */
DILOG_API dilog_status dilog_discover(const char* poly_csv, const int* exponents, size_t count, int digits,
                                      const char* max_norm, dilog_report** out);

DILOG_API dilog_status dilog_special_khoi(int digits, dilog_report** out);
/* z is a rational literal ("0.3", "3/10") strictly inside (0, 1). */
DILOG_API dilog_status dilog_special_lima(const char* z, int digits, dilog_report** out);
DILOG_API dilog_status dilog_special_conjecture(int digits, dilog_report** out);

/* Summary rows (name, index, base degree, d2) as a JSON array. */
DILOG_API dilog_status dilog_corpus_list(dilog_report** out);
/* Full corpus as a JSON array of ladders, to a string or a file. */
DILOG_API dilog_status dilog_corpus_json(char** out);
DILOG_API dilog_status dilog_corpus_export(const char* path);

DILOG_API int dilog_report_passed(const dilog_report* report);
/* Owned by the report. */
DILOG_API const char* dilog_report_json(const dilog_report* report);
DILOG_API void dilog_report_free(dilog_report* report);

#ifdef __cplusplus
}
#endif

#endif /* DILOG_DILOG_H */
