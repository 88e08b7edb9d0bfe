#ifndef DISCLAB_H
#define DISCLAB_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum DisclabStatus {
  DISCLAB_STATUS_OK = 0,
  DISCLAB_STATUS_NULL_POINTER = 1,
  DISCLAB_STATUS_INVALID_ARGUMENT = 2,
  DISCLAB_STATUS_DIMENSION_MISMATCH = 3,
  DISCLAB_STATUS_OUT_OF_RANGE = 4,
  DISCLAB_STATUS_EMPTY_POINT_SET = 5,
  DISCLAB_STATUS_GUARD_EXCEEDED = 6,
  DISCLAB_STATUS_INTERNAL = 7,
} DisclabStatus;

typedef enum DisclabKind {
  DISCLAB_KIND_STAR = 0,
  DISCLAB_KIND_EXTREME = 1,
  DISCLAB_KIND_PERIODIC = 2,
  DISCLAB_KIND_DIAPHONY = 3,
} DisclabKind;

/**
 * Opaque point set.
 */
typedef struct DisclabPointSet DisclabPointSet;

/**
 * Monte Carlo estimate with its sampling metadata.
 */
typedef struct DisclabMcResult {
  double value;
  double std_error;
  uint64_t samples;
  uint64_t seed;
} DisclabMcResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. The pointer is
 * valid until the next `disclab_*` call on the same thread.
 */
const char *disclab_last_error(void);

/**
 * Copies `n * dim` row-major coordinates into a new point set.
 *
 * # Safety
 * `coords` must point to `n * dim` doubles (may be NULL when `n == 0`);
 * `out` must be writable.
 */
enum DisclabStatus disclab_points_new(size_t dim,
                                      const double *coords,
                                      size_t n,
                                      struct DisclabPointSet **out);

/**
 * Releases a point set. NULL is ignored.
 *
 * # Safety
 * `ps` must come from this library and not be used afterwards.
 */
void disclab_points_free(struct DisclabPointSet *ps);

/**
 * Number of points, 0 for NULL.
 *
 * # Safety
 * `ps` must be NULL or a live handle.
 */
size_t disclab_points_len(const struct DisclabPointSet *ps);

/**
 * Dimension, 0 for NULL.
 *
 * # Safety
 * `ps` must be NULL or a live handle.
 */
size_t disclab_points_dim(const struct DisclabPointSet *ps);

/**
 * Copies the row-major coordinates into `buf`, which must hold `len * dim`.
 *
 * # Safety
 * `buf` must be writable for `buf_len` doubles.
 */
enum DisclabStatus disclab_points_copy(const struct DisclabPointSet *ps,
                                       double *buf,
                                       size_t buf_len);

/**
 * First `n` terms of the van der Corput sequence in `base`.
 *
 * # Safety
 * `out` must be writable.
 */
enum DisclabStatus disclab_vdc_prefix(uint32_t base, size_t n, struct DisclabPointSet **out);

/**
 * First `n` terms of the Halton sequence with `dim` pairwise coprime bases.
 *
 * # Safety
 * `bases` must point to `dim` values; `out` must be writable.
 */
enum DisclabStatus disclab_halton_prefix(const uint32_t *bases,
                                         size_t dim,
                                         size_t n,
                                         struct DisclabPointSet **out);

/**
 * The set `{(x_k, k/n) : k < n}` built from the first `n` points of `ps`.
 *
 * # Safety
 * `ps` must be a live handle; `out` must be writable.
 */
enum DisclabStatus disclab_lift(const struct DisclabPointSet *ps,
                                size_t n,
                                struct DisclabPointSet **out);

/**
 * Base-`b` radical inverse of `k`; needs `b >= 2` and `k < 2^53`.
 *
 * # Safety
 * `out` must be writable.
 */
enum DisclabStatus disclab_radical_inverse(uint64_t k, uint32_t base, double *out);

/**
 * Exact L2 discrepancy (or diaphony) from the closed forms.
 *
 * # Safety
 * `ps` must be a live handle; `out` must be writable.
 */
enum DisclabStatus disclab_l2(const struct DisclabPointSet *ps, enum DisclabKind kind, double *out);

/**
 * Diaphony restricted to `max_j |h_j| <= cutoff`: `squared` is the truncated
 * `F²` and `F² <= squared + tail_bound`.
 *
 * # Safety
 * `ps` must be a live handle; both outputs must be writable.
 */
enum DisclabStatus disclab_diaphony_truncated(const struct DisclabPointSet *ps,
                                              uint64_t cutoff,
                                              double *squared,
                                              double *tail_bound);

/**
 * Seeded Monte Carlo `L_p` estimate (star, extreme or periodic).
 *
 * # Safety
 * `ps` must be a live handle; `out` must be writable.
 */
enum DisclabStatus disclab_mc_lp(const struct DisclabPointSet *ps,
                                 enum DisclabKind kind,
                                 double p,
                                 uint64_t samples,
                                 uint64_t seed,
                                 struct DisclabMcResult *out);

/**
 * Exact star or extreme `L_p` discrepancy of a one-dimensional set.
 *
 * # Safety
 * `ps` must be a live handle; `out` must be writable.
 */
enum DisclabStatus disclab_exact_lp_1d(const struct DisclabPointSet *ps,
                                       enum DisclabKind kind,
                                       double p,
                                       double *out);

/**
 * Exact star or extreme `L∞` discrepancy: any `N` in one dimension,
 * `N <= 64` in two.
 *
 * # Safety
 * `ps` must be a live handle; `out` must be writable.
 */
enum DisclabStatus disclab_linf(const struct DisclabPointSet *ps,
                                enum DisclabKind kind,
                                double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DISCLAB_H */
