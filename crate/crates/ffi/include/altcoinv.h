#ifndef ALTCOINV_H
#define ALTCOINV_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. Zero is success.
 */
typedef enum AltcoinvStatus {
  ALTCOINV_STATUS_OK = 0,
  ALTCOINV_STATUS_NULL_POINTER = 1,
  ALTCOINV_STATUS_INVALID_ARGUMENT = 2,
  ALTCOINV_STATUS_PARSE_ERROR = 3,
  ALTCOINV_STATUS_CAP_EXCEEDED = 4,
  /**
   * A checked claim turned out false.
   */
  ALTCOINV_STATUS_FALSIFIED = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  ALTCOINV_STATUS_INTERNAL = 6,
} AltcoinvStatus;

typedef enum AltcoinvPolyOp {
  ALTCOINV_POLY_OP_ADD = 0,
  ALTCOINV_POLY_OP_SUB = 1,
  ALTCOINV_POLY_OP_MUL = 2,
} AltcoinvPolyOp;

/**
 * A Dyck path.
 */
typedef struct AltcoinvPath AltcoinvPath;

/**
 * A polynomial in `x_1..x_n, y_1..y_n` with rational coefficients.
 */
typedef struct AltcoinvPoly AltcoinvPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer stays
 * valid until the next call into the library on the same thread.
 */
const char *altcoinv_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void altcoinv_string_free(char *s);

/**
 * Parses a word in `N` and `E` into a Dyck path.
 *
 * # Safety
 * `word` must be a NUL-terminated string and `out` writable.
 */
enum AltcoinvStatus altcoinv_path_parse(const char *word, struct AltcoinvPath **out);

/**
 * # Safety
 * `p` must be NULL or a live handle from this library.
 */
void altcoinv_path_free(struct AltcoinvPath *p);

/**
 * Size, area, dinv and bounce of a path. Any out-pointer may be NULL.
 *
 * # Safety
 * `p` must be a live handle; non-NULL out-pointers must be writable.
 */
enum AltcoinvStatus altcoinv_path_stats(const struct AltcoinvPath *p,
                                        uintptr_t *n,
                                        uintptr_t *area,
                                        uintptr_t *dinv,
                                        uintptr_t *bounce);

/**
 * The determinant `Δ_{X(π)}` of a path.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum AltcoinvStatus altcoinv_path_delta(const struct AltcoinvPath *p, struct AltcoinvPoly **out);

/**
 * Parses text such as `3/2*x1^2*y3 - y2` in `2n` variables.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` writable.
 */
enum AltcoinvStatus altcoinv_poly_parse(uintptr_t n, const char *text, struct AltcoinvPoly **out);

/**
 * # Safety
 * `p` must be NULL or a live handle from this library.
 */
void altcoinv_poly_free(struct AltcoinvPoly *p);

/**
 * Number of variable pairs `n` and number of terms.
 *
 * # Safety
 * `p` must be a live handle; non-NULL out-pointers must be writable.
 */
enum AltcoinvStatus altcoinv_poly_shape(const struct AltcoinvPoly *p,
                                        uintptr_t *n,
                                        uintptr_t *terms);

/**
 * `out = a op b`; both operands must have the same `n`.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` writable.
 */
enum AltcoinvStatus altcoinv_poly_binary(const struct AltcoinvPoly *a,
                                         const struct AltcoinvPoly *b,
                                         enum AltcoinvPolyOp op,
                                         struct AltcoinvPoly **out);

/**
 * Writes 1 to `equal` if the polynomials are identical, else 0.
 *
 * # Safety
 * `a` and `b` must be live handles and `equal` writable.
 */
enum AltcoinvStatus altcoinv_poly_equal(const struct AltcoinvPoly *a,
                                        const struct AltcoinvPoly *b,
                                        int32_t *equal);

/**
 * Canonical text form.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum AltcoinvStatus altcoinv_poly_to_text(const struct AltcoinvPoly *p, char **out);

/**
 * Canonical JSON form.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum AltcoinvStatus altcoinv_poly_to_json(const struct AltcoinvPoly *p, char **out);

/**
 * Catalan number `C_n`; fails if it does not fit in 64 bits.
 *
 * # Safety
 * `out` must be writable.
 */
enum AltcoinvStatus altcoinv_catalan(uintptr_t n, uint64_t *out);

/**
 * `Σ q^dinv t^area` over Dyck paths of size `n`, as text.
 *
 * # Safety
 * `out` must be writable.
 */
enum AltcoinvStatus altcoinv_qt_catalan(uintptr_t n, char **out);

/**
 * Checks that the path determinants form a basis of the alternating
 * component, with exact arithmetic. Returns `Falsified` if they do not.
 * `report`, if not NULL, receives the JSON certificate.
 *
 * # Safety
 * `report` must be NULL or writable.
 */
enum AltcoinvStatus altcoinv_verify_basis(uintptr_t n, char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ALTCOINV_H */
