/* C ABI for the culminating-paths library. */

#pragma once

/* Generated with cbindgen:0.27.0 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
enum CulmStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  CULM_STATUS_OK = 0,
  CULM_STATUS_RUNTIME_ERROR = 1,
  CULM_STATUS_INVALID_ARGUMENT = 2,
  CULM_STATUS_EMPTY_CLASS = 3,
  CULM_STATUS_GIVE_UP = 4,
  CULM_STATUS_PARSE_ERROR = 5,
  CULM_STATUS_NULL_POINTER = 6,
};
#ifndef __cplusplus
typedef int32_t CulmStatus;
#endif // __cplusplus

/**
 * Opaque handle to a validated step system.
 */
typedef struct CulmSystem CulmSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Validates and allocates a step system handle; the caller owns it and must
 * release it with `culm_system_free`.
 *
 * # Safety
 * `out` must point to writable storage for one pointer.
 */
CulmStatus culm_system_new(uint32_t a, uint32_t b, struct CulmSystem **out);

/**
 * Releases a handle from `culm_system_new`. NULL is ignored.
 *
 * # Safety
 * `sys` must be a pointer previously returned by `culm_system_new` that has
 * not been freed yet.
 */
void culm_system_free(struct CulmSystem *sys);

/**
 * Frees a string returned by any `culm_*` call. NULL is ignored.
 *
 * # Safety
 * `s` must originate from this library and not be freed twice.
 */
void culm_string_free(char *s);

/**
 * Number of culminating words of length n, as a decimal string the caller
 * frees with `culm_string_free`.
 *
 * # Safety
 * `sys` must be a live handle; `out` must point to writable storage for one
 * pointer.
 */
CulmStatus culm_count_culminating(const struct CulmSystem *sys, uint32_t n, char **out);

/**
 * Number of positive words of length n, as a decimal string.
 *
 * # Safety
 * As for `culm_count_culminating`.
 */
CulmStatus culm_count_positive(const struct CulmSystem *sys, uint32_t n, char **out);

/**
 * Number of culminating words of length n with final (and maximal) height
 * exactly k, as a decimal string. Requires n >= 1 and k >= 1.
 *
 * # Safety
 * As for `culm_count_culminating`.
 */
CulmStatus culm_count_culminating_height(const struct CulmSystem *sys,
                                         uint32_t n,
                                         uint32_t k,
                                         char **out);

/**
 * Final height of the walk encoded by a 'u'/'d' word.
 *
 * # Safety
 * `sys` must be a live handle; `word` must be a NUL-terminated string;
 * `out` must point to writable storage for one i64.
 */
CulmStatus culm_phi(const struct CulmSystem *sys, const char *word, int64_t *out);

/**
 * Whether the word is culminating in this system.
 *
 * # Safety
 * As for `culm_phi`, with `out` pointing to one bool.
 */
CulmStatus culm_is_culminating(const struct CulmSystem *sys, const char *word, bool *out);

/**
 * Whether the word is positive in this system.
 *
 * # Safety
 * As for `culm_is_culminating`.
 */
CulmStatus culm_is_positive(const struct CulmSystem *sys, const char *word, bool *out);

/**
 * Draws one uniform walk and returns the JSON record the CLI would emit.
 * `method` is one of "recursive", "fixed-height", "grammar", "anticipated",
 * "reject-positive", "hybrid", "boltzmann"; `k` is the target height for
 * "fixed-height" and ignored (pass 0) otherwise; `epsilon` is the Boltzmann
 * size tolerance and ignored otherwise. Identical arguments produce an
 * identical record.
 *
 * # Safety
 * `sys` must be a live handle; `method` a NUL-terminated string; `out`
 * writable storage for one pointer. Free the result with
 * `culm_string_free`.
 */
CulmStatus culm_sample_json(const struct CulmSystem *sys,
                            const char *method,
                            uint32_t n,
                            uint32_t k,
                            uint64_t seed,
                            double epsilon,
                            char **out);

/**
 * Static description of a status code; never freed by the caller.
 */
const char *culm_status_message(CulmStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
