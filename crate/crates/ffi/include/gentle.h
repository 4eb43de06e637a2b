#ifndef GENTLE_H
#define GENTLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GentleStatus {
  GENTLE_STATUS_OK = 0,
  GENTLE_STATUS_NULL_POINTER = 1,
  GENTLE_STATUS_INVALID_UTF8 = 2,
  /**
   * The algebra or triangulation text was rejected.
   */
  GENTLE_STATUS_PARSE_ERROR = 3,
  /**
   * A module string did not parse over the algebra.
   */
  GENTLE_STATUS_INVALID_STRING = 4,
  GENTLE_STATUS_ORACLE_ERROR = 5,
  GENTLE_STATUS_INVALID_ARGUMENT = 6,
  GENTLE_STATUS_PANIC = 7,
} GentleStatus;

/**
 * Opaque validated gentle algebra.
 */
typedef struct GentleAlgebraHandle GentleAlgebraHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *gentle_last_error(void);

/**
 * Parse an algebra file (`vertex`, `arrow`, `rel` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum GentleStatus gentle_algebra_parse(const char *text_ptr, struct GentleAlgebraHandle **out);

/**
 * Build the gentle algebra of a triangulation file.
 *
 * # Safety
 * As for [`gentle_algebra_parse`].
 */
enum GentleStatus gentle_algebra_from_triangulation(const char *text_ptr,
                                                    struct GentleAlgebraHandle **out);

/**
 * Release a handle; null is ignored.
 *
 * # Safety
 * `h` must come from this library and not be used afterwards.
 */
void gentle_algebra_free(struct GentleAlgebraHandle *h);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum GentleStatus gentle_algebra_vertex_count(const struct GentleAlgebraHandle *h, size_t *out);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum GentleStatus gentle_algebra_arrow_count(const struct GentleAlgebraHandle *h, size_t *out);

/**
 * Number of relation cycles.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum GentleStatus gentle_algebra_cycle_count(const struct GentleAlgebraHandle *h, size_t *out);

/**
 * Global dimension; `-1` for infinite.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum GentleStatus gentle_algebra_gl_dim(const struct GentleAlgebraHandle *h, int64_t *out);

/**
 * The algebra in file format; release with [`gentle_string_free`].
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer.
 */
enum GentleStatus gentle_algebra_to_text(const struct GentleAlgebraHandle *h, char **out);

/**
 * # Safety
 * `s` must come from this library, or be null.
 */
void gentle_string_free(char *s);

/**
 * Projective dimension of a string module; `-1` for infinite.
 *
 * # Safety
 * `h` must be a live handle, `string` NUL-terminated, `out` valid.
 */
enum GentleStatus gentle_proj_dim(const struct GentleAlgebraHandle *h,
                                  const char *string,
                                  int64_t *out);

/**
 * `dim Ext^degree(M(from), M(to))` for `degree ≥ 1`.
 *
 * # Safety
 * `h` must be a live handle, strings NUL-terminated, `out` valid.
 */
enum GentleStatus gentle_ext_dim(const struct GentleAlgebraHandle *h,
                                 const char *from,
                                 const char *to,
                                 size_t degree,
                                 size_t *out);

/**
 * Fill `buf[i]` with `dim Ext^{i+1}` for `i < len`.
 *
 * # Safety
 * `buf` must point to `len` writable elements.
 */
enum GentleStatus gentle_ext_dims(const struct GentleAlgebraHandle *h,
                                  const char *from,
                                  const char *to,
                                  size_t *buf,
                                  size_t len);

/**
 * Eventual behaviour of `dim Ext^i`: `period` is 0 when the sequence is
 * eventually zero; `tail_start` is the first degree of the repeating part.
 *
 * # Safety
 * `h` must be a live handle, strings NUL-terminated, out-pointers valid.
 */
enum GentleStatus gentle_ext_period(const struct GentleAlgebraHandle *h,
                                    const char *from,
                                    const char *to,
                                    size_t *period,
                                    size_t *tail_start);

/**
 * `dim Ext^degree` computed by exact linear algebra, independently of
 * the string combinatorics.
 *
 * # Safety
 * As for [`gentle_ext_dim`].
 */
enum GentleStatus gentle_oracle_ext_dim(const struct GentleAlgebraHandle *h,
                                        const char *from,
                                        const char *to,
                                        size_t degree,
                                        size_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GENTLE_H */
