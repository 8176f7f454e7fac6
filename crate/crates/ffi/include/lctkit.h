#ifndef LCTKIT_H
#define LCTKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum LctStatus {
  LCT_STATUS_OK = 0,
  LCT_STATUS_INVALID_INPUT = 2,
  LCT_STATUS_CAP_EXCEEDED = 3,
  LCT_STATUS_INTERNAL = 4,
  LCT_STATUS_NULL_POINTER = 5,
  /**
   * The exact value does not fit in 64-bit integers.
   */
  LCT_STATUS_OVERFLOW = 6,
} LctStatus;

/**
 * Opaque root system handle.
 */
typedef struct LctRootSystem LctRootSystem;

/**
 * An exact value `num/den` with `den > 0`, or `+∞` when `infinite` is set
 * (then `num` and `den` are 0).
 */
typedef struct LctRational {
  int64_t num;
  int64_t den;
  bool infinite;
} LctRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty after a
 * success. The pointer stays valid until the next call on this thread.
 */
const char *lct_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *lct_version(void);

/**
 * Build a root system from text such as `"A3"`, `"A5,D4"` or `"gl4"`.
 *
 * # Safety
 * `type_text` must be a NUL-terminated string; `out` must be writable.
 */
enum LctStatus lct_root_system_new(const char *type_text, struct LctRootSystem **out);

/**
 * The root system of gl_n in its n-coordinate realization.
 *
 * # Safety
 * `out` must be writable.
 */
enum LctStatus lct_root_system_gl(size_t n, struct LctRootSystem **out);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `rs` must be null or a handle not yet freed.
 */
void lct_root_system_free(struct LctRootSystem *rs);

/**
 * Semisimple rank.
 *
 * # Safety
 * `rs` must be a live handle; `out` must be writable.
 */
enum LctStatus lct_root_system_rank(const struct LctRootSystem *rs, size_t *out);

/**
 * Number of positive roots.
 *
 * # Safety
 * `rs` must be a live handle; `out` must be writable.
 */
enum LctStatus lct_root_system_num_positive(const struct LctRootSystem *rs, size_t *out);

/**
 * Coxeter number; the system must be simple.
 *
 * # Safety
 * `rs` must be a live handle; `out` must be writable.
 */
enum LctStatus lct_root_system_coxeter(const struct LctRootSystem *rs, uint32_t *out);

/**
 * ε⋆ of the nilpotent orbit of gl_n with Jordan blocks `parts`. When
 * `witness_k` is non-null it receives the minimizing prefix length, or 0
 * for the zero orbit.
 *
 * # Safety
 * `parts` must point to `len` values; `out` must be writable; `witness_k`
 * must be null or writable.
 */
enum LctStatus lct_orbit_epsilon(const uint32_t *parts,
                                 size_t len,
                                 struct LctRational *out,
                                 size_t *witness_k);

/**
 * lct of the Weyl discriminant, from the dense flats of the arrangement.
 *
 * # Safety
 * `rs` must be a live handle; `out` must be writable.
 */
enum LctStatus lct_arrangement_lct(const struct LctRootSystem *rs, struct LctRational *out);

/**
 * Relative lct for the standard Levi spanned by the 1-based simple-root
 * `labels`, by the closed minimum over simple-derived Levis.
 *
 * # Safety
 * `rs` must be a live handle; `labels` must point to `len` values; `out`
 * must be writable.
 */
enum LctStatus lct_relative_lct(const struct LctRootSystem *rs,
                                const size_t *labels,
                                size_t len,
                                uint32_t m,
                                struct LctRational *out);

/**
 * Relative lct as in [`lct_relative_lct`], from the intersection lattice.
 *
 * # Safety
 * As for [`lct_relative_lct`].
 */
enum LctStatus lct_relative_lct_oracle(const struct LctRootSystem *rs,
                                       const size_t *labels,
                                       size_t len,
                                       uint32_t m,
                                       struct LctRational *out);

/**
 * ε⋆ of the `ell`-th power of a Haar-random `n × n` unitary matrix.
 *
 * # Safety
 * `out` must be writable.
 */
enum LctStatus lct_power_measure(uint32_t n, uint32_t ell, struct LctRational *out);

/**
 * ε⋆ of `L²(U_n / U_λ)` for block sizes `parts`.
 *
 * # Safety
 * `parts` must point to `len` values; `out` must be writable.
 */
enum LctStatus lct_homogeneous(const uint32_t *parts, size_t len, struct LctRational *out);

/**
 * Multiplicity exponent `(1 − ε)/(1 + ε)`; `+∞` maps to −1.
 *
 * # Safety
 * `out` must be writable.
 */
enum LctStatus lct_mult_exponent(struct LctRational epsilon, struct LctRational *out);

/**
 * Lower bound `min 2/h` over simple factors such as `"A5,D4"`.
 *
 * # Safety
 * `factors` must be a NUL-terminated string; `out` must be writable.
 */
enum LctStatus lct_rep_bound(const char *factors, struct LctRational *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCTKIT_H */
