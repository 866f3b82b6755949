#ifndef SIPVERIFY_H
#define SIPVERIFY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SvStatus {
  SV_STATUS_OK = 0,
  /**
   * The identity sides disagree.
   */
  SV_STATUS_MISMATCH = 1,
  SV_STATUS_NULL_ARGUMENT = 2,
  SV_STATUS_INVALID_ARGUMENT = 3,
  SV_STATUS_UNKNOWN_ID = 4,
  SV_STATUS_NOT_MEMBER = 5,
  SV_STATUS_CAP_EXCEEDED = 6,
  /**
   * Any other engine error, or a caught panic.
   */
  SV_STATUS_INTERNAL = 7,
} SvStatus;

/**
 * Opaque partition class.
 */
typedef struct SvClass SvClass;

/**
 * Opaque verification report.
 */
typedef struct SvReport SvReport;

/**
 * Opaque truncated q-series.
 */
typedef struct SvSeries SvSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next sipverify call on this thread.
 */
const char *sv_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void sv_string_free(char *s);

/**
 * Library version as a static string.
 */
const char *sv_version(void);

size_t sv_catalog_len(void);

/**
 * Identity id at `index` (static string), or null when out of range.
 */
const char *sv_catalog_id(size_t index);

/**
 * Verify identity `id` through `q^order`. On `Ok` or `Mismatch` a report is
 * written to `out`.
 *
 * # Safety
 * `id` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SvStatus sv_verify(const char *id, int64_t order, uint64_t cap, struct SvReport **out);

/**
 * # Safety
 * `r` must be a report from [`sv_verify`].
 */
bool sv_report_is_match(const struct SvReport *r);

/**
 * Lowest mismatching q-exponent, or -1 on a match.
 *
 * # Safety
 * `r` must be a report from [`sv_verify`].
 */
int64_t sv_report_mismatch_exponent(const struct SvReport *r);

/**
 * JSON form of the report; free with [`sv_string_free`].
 *
 * # Safety
 * `r` must be a report from [`sv_verify`].
 */
char *sv_report_json(const struct SvReport *r, bool timings);

/**
 * # Safety
 * `r` must be null or a report from [`sv_verify`], freed at most once.
 */
void sv_report_free(struct SvReport *r);

/**
 * Build one side (`"lhs"`, `"rhs"`, `"oracle"`, ...) of an identity.
 *
 * # Safety
 * `id` and `side` must be NUL-terminated strings and `out` a valid pointer.
 */
enum SvStatus sv_build_side(const char *id,
                            const char *side,
                            int64_t order,
                            uint64_t cap,
                            struct SvSeries **out);

/**
 * # Safety
 * `s` must be a series handle.
 */
int64_t sv_series_max_order(const struct SvSeries *s);

/**
 * Canonical text of the coefficient of `q^k`; free with [`sv_string_free`].
 *
 * # Safety
 * `s` must be a series handle.
 */
char *sv_series_coeff(const struct SvSeries *s, int64_t k);

/**
 * # Safety
 * `s` must be null or a series handle, freed at most once.
 */
void sv_series_free(struct SvSeries *s);

/**
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SvStatus sv_class_new(const char *name, struct SvClass **out);

/**
 * Number of members of weight `n`.
 *
 * # Safety
 * `c` must be a class handle and `count` a valid pointer.
 */
enum SvStatus sv_class_count(const struct SvClass *c, uint64_t n, uint64_t cap, uint64_t *count);

/**
 * `Ok` for a member, `NotMember` (with the violated rule as last error)
 * otherwise.
 *
 * # Safety
 * `c` must be a class handle and `parts` a NUL-terminated string.
 */
enum SvStatus sv_class_check(const struct SvClass *c, const char *parts);

/**
 * Decompose a member; writes caller-owned `basis` and `pi` strings.
 *
 * # Safety
 * `c` must be a class handle, `parts` a NUL-terminated string, and the
 * output pointers valid.
 */
enum SvStatus sv_class_decompose(const struct SvClass *c,
                                 const char *parts,
                                 char **basis,
                                 char **pi);

/**
 * # Safety
 * `c` must be null or a class handle, freed at most once.
 */
void sv_class_free(struct SvClass *c);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIPVERIFY_H */
