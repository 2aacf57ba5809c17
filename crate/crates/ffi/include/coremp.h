/* C interface for the coremp library. Regenerated by the build script; do not edit. */

#ifndef COREMP_H
#define COREMP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible function.
 */
typedef enum CorempStatus {
  COREMP_STATUS_OK = 0,
  COREMP_STATUS_PARSE_ERROR = 1,
  COREMP_STATUS_INFINITE_SET = 2,
  COREMP_STATUS_PRECONDITION_VIOLATED = 3,
  COREMP_STATUS_GUARD_EXCEEDED = 4,
  COREMP_STATUS_NULL_POINTER = 5,
  COREMP_STATUS_INVALID_UTF8 = 6,
} CorempStatus;

/**
 * Reason tags for finiteness verdicts.
 */
typedef enum CorempReason {
  COREMP_REASON_G_NOT1 = 0,
  COREMP_REASON_X_FAILS = 1,
  COREMP_REASON_ALL_ZERO_FINITE = 2,
  COREMP_REASON_POSITIVE_MODULUS_FINITE = 3,
  COREMP_REASON_S_EQUALS_ONE = 4,
  COREMP_REASON_EMPTY_T_INFINITE = 5,
} CorempReason;

/**
 * Opaque handle to a multipartition datum.
 */
typedef struct CorempDatum CorempDatum;

/**
 * Opaque handle to a set of data.
 */
typedef struct CorempDatumSet CorempDatumSet;

/**
 * Opaque handle to a multipartition.
 */
typedef struct CorempMultipartition CorempMultipartition;

/**
 * A finiteness verdict: `finite` is 0/1, `condition_x` is -1 when not
 * applicable and 0/1 otherwise.
 */
typedef struct CorempVerdict {
  uint8_t finite;
  uint64_t g_value;
  int8_t condition_x;
  enum CorempReason reason;
} CorempVerdict;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The library version as a static string; do not free.
 */
const char *coremp_version(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `ptr` must come from a coremp function and must not be used afterwards.
 */
void coremp_string_free(char *ptr);

/**
 * Parses a datum from its text form `s:c1,c2,...`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum CorempStatus coremp_datum_parse(const char *text, struct CorempDatum **out);

/**
 * # Safety
 * `ptr` must come from `coremp_datum_parse` and not be used afterwards.
 */
void coremp_datum_free(struct CorempDatum *ptr);

/**
 * Parses a datum set from its text form `s:c,...;s:c,...` (empty string
 * allowed).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum CorempStatus coremp_datum_set_parse(const char *text, struct CorempDatumSet **out);

/**
 * # Safety
 * `ptr` must come from `coremp_datum_set_parse` and not be used afterwards.
 */
void coremp_datum_set_free(struct CorempDatumSet *ptr);

/**
 * Parses a multipartition from its text form `[2]|[4,1,1]|[1,1]`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum CorempStatus coremp_multipartition_parse(const char *text, struct CorempMultipartition **out);

/**
 * # Safety
 * `ptr` must come from `coremp_multipartition_parse` and not be used
 * afterwards.
 */
void coremp_multipartition_free(struct CorempMultipartition *ptr);

/**
 * Writes the canonical text form of a multipartition.
 *
 * # Safety
 * `mp` must be a live handle; `out` receives an owned string.
 */
enum CorempStatus coremp_multipartition_to_string(const struct CorempMultipartition *mp,
                                                  char **out);

/**
 * Core membership and weight of a multipartition under one datum.
 *
 * # Safety
 * `mp` and `datum` must be live handles; the out-pointers must be valid.
 */
enum CorempStatus coremp_check(const struct CorempMultipartition *mp,
                               const struct CorempDatum *datum,
                               uint8_t *out_is_core,
                               uint64_t *out_weight);

/**
 * Decides whether the intersection of core sets is finite.
 *
 * # Safety
 * `set` must be a live handle and `out` a valid pointer.
 */
enum CorempStatus coremp_decide_finite(const struct CorempDatumSet *set, struct CorempVerdict *out);

/**
 * Enumerates members as a JSON document (same shape as the CLI). Pass
 * `complete = 0` for bounded enumeration up to `max_size`.
 *
 * # Safety
 * `set` must be a live handle; `out_json` receives an owned string.
 */
enum CorempStatus coremp_enumerate_json(const struct CorempDatumSet *set,
                                        uint8_t complete,
                                        uint64_t max_size,
                                        char **out_json);

/**
 * Orbit members of the empty multipartition as a JSON document.
 *
 * # Safety
 * `datum` must be a live handle; `out_json` receives an owned string.
 */
enum CorempStatus coremp_orbit_json(const struct CorempDatum *datum,
                                    uint64_t max_size,
                                    char **out_json);

/**
 * Closed-form counts. `family` is one of "ss" (params s,t,a,b), "t0"
 * (s,a,b), "aa" (s,t,a), "anderson" (s,t); the count is written as a
 * decimal string.
 *
 * # Safety
 * `family` must be a valid NUL-terminated string, `params` must point to
 * `params_len` integers, and `out_decimal` receives an owned string.
 */
enum CorempStatus coremp_count(const char *family,
                               const uint64_t *params,
                               size_t params_len,
                               char **out_decimal);

/**
 * Decodes a boundary word. For family "st" pass `a = 0` and receive the
 * (s,t)-core; for "aa" receive the bipartition `[..]|[..]`.
 *
 * # Safety
 * `family` and `word` must be valid NUL-terminated strings; `out`
 * receives an owned string.
 */
enum CorempStatus coremp_codec_decode(const char *family,
                                      const char *word,
                                      uint64_t s,
                                      uint64_t t,
                                      uint64_t a,
                                      char **out);

/**
 * Encodes a partition (family "st", text form `[3,1]`) or bipartition
 * (family "aa", text form `[1]|[2]`) as its canonical boundary word.
 *
 * # Safety
 * `family` and `object` must be valid NUL-terminated strings; `out`
 * receives an owned string.
 */
enum CorempStatus coremp_codec_encode(const char *family,
                                      const char *object,
                                      uint64_t s,
                                      uint64_t t,
                                      uint64_t a,
                                      char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* COREMP_H */
