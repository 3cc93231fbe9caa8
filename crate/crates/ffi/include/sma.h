#ifndef SMA_H
#define SMA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call. Codes 1 to 3 match the `sma` exit codes.
 */
typedef enum SmaStatus {
  SMA_STATUS_OK = 0,
  SMA_STATUS_INVALID_ARGUMENT = 1,
  SMA_STATUS_NONEXISTENT = 2,
  SMA_STATUS_VERIFICATION_FAILED = 3,
  SMA_STATUS_NULL_POINTER = 4,
  SMA_STATUS_OVERFLOW = 5,
  SMA_STATUS_PARSE = 6,
  SMA_STATUS_PANIC = 7,
} SmaStatus;

/**
 * Property checked by `sma_verify`.
 */
typedef enum SmaCheck {
  SMA_CHECK_SMA = 0,
  SMA_CHECK_SAME_ROW = 1,
  SMA_CHECK_SHIFTABLE = 2,
  SMA_CHECK_HEFFTER = 3,
} SmaCheck;

/**
 * Opaque grid handle.
 */
typedef struct SmaArray SmaArray;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, empty after a success.
 * The pointer stays valid until the next library call on the same thread.
 */
const char *sma_last_error(void);

/**
 * Static name of a status code, e.g. "NONEXISTENT".
 */
const char *sma_status_name(enum SmaStatus status);

/**
 * Builds an m x n array into `*out`.
 *
 * # Safety
 * `out` must be null or point to writable storage for one pointer.
 */
enum SmaStatus sma_generate(size_t m, size_t n, struct SmaArray **out);

/**
 * Copies `rows * cols` row-major entries into a new array.
 *
 * # Safety
 * `entries` must point to `rows * cols` readable values; `out` as in `sma_generate`.
 */
enum SmaStatus sma_from_entries(size_t rows,
                                size_t cols,
                                const int64_t *entries,
                                struct SmaArray **out);

/**
 * Parses CSV or JSON text (format is detected from the content).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` as in `sma_generate`.
 */
enum SmaStatus sma_parse(const char *text, struct SmaArray **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `a` must be null or a handle from this library that was not freed yet.
 */
void sma_array_free(struct SmaArray *a);

/**
 * Number of rows, 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t sma_array_rows(const struct SmaArray *a);

/**
 * Number of columns, 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t sma_array_cols(const struct SmaArray *a);

/**
 * Reads the entry at 0-based (`row`, `col`).
 *
 * # Safety
 * `a` must be null or a live handle; `out` must be null or writable.
 */
enum SmaStatus sma_array_get(const struct SmaArray *a, size_t row, size_t col, int64_t *out);

/**
 * Copies all entries row-major into `buf`, which holds `len` values.
 *
 * # Safety
 * `a` must be null or a live handle; `buf` must have room for `len` values.
 */
enum SmaStatus sma_array_copy_entries(const struct SmaArray *a, int64_t *buf, size_t len);

/**
 * Returns `SMA_STATUS_OK` when the check passes and
 * `SMA_STATUS_VERIFICATION_FAILED` with the first violation otherwise.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
enum SmaStatus sma_verify(const struct SmaArray *a, enum SmaCheck check);

/**
 * Adds `k` to every positive entry and subtracts it from every negative one.
 *
 * # Safety
 * `a` must be null or a live handle; `out` as in `sma_generate`.
 */
enum SmaStatus sma_shift(const struct SmaArray *a, uint64_t k, struct SmaArray **out);

/**
 * Builds `[H, -H]` from a Heffter-like grid.
 *
 * # Safety
 * `a` must be null or a live handle; `out` as in `sma_generate`.
 */
enum SmaStatus sma_mirror(const struct SmaArray *a, struct SmaArray **out);

/**
 * Writes whether an m x n array exists. `n` must be even and positive.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum SmaStatus sma_feasible(size_t m, size_t n, bool *out);

/**
 * One-line description of the construction used for m x n.
 *
 * # Safety
 * `out` must be null or writable; free the result with `sma_string_free`.
 */
enum SmaStatus sma_plan(size_t m, size_t n, char **out);

/**
 * CSV text of the array, one row per line.
 *
 * # Safety
 * `a` must be null or a live handle; free the result with `sma_string_free`.
 */
enum SmaStatus sma_to_csv(const struct SmaArray *a, char **out);

/**
 * JSON text of the array.
 *
 * # Safety
 * `a` must be null or a live handle; free the result with `sma_string_free`.
 */
enum SmaStatus sma_to_json(const struct SmaArray *a, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library that was not freed yet.
 */
void sma_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SMA_H */
