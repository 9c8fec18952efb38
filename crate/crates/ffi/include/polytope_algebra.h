#ifndef POLYTOPE_ALGEBRA_H
#define POLYTOPE_ALGEBRA_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum PaStatus {
  PA_STATUS_OK = 0,
  /**
   * Malformed argument: bad flat string, bad JSON, unknown arrangement.
   */
  PA_STATUS_INVALID_INPUT = 1,
  /**
   * Operation does not apply to this arrangement or object.
   */
  PA_STATUS_PRECONDITION = 2,
  PA_STATUS_ARRANGEMENT_MISMATCH = 3,
  PA_STATUS_NOT_DEFORMATION = 4,
  /**
   * Requested size is beyond the enumeration bounds.
   */
  PA_STATUS_RESOURCE_LIMIT = 5,
  PA_STATUS_INTERNAL = 6,
  PA_STATUS_NULL_POINTER = 7,
  /**
   * A verification ran and at least one check failed.
   */
  PA_STATUS_VERIFICATION_FAILED = 8,
  PA_STATUS_PANIC = 9,
} PaStatus;

/**
 * An enumerated arrangement with a lazily computed η table.
 */
typedef struct PaArrangement PaArrangement;

/**
 * A deformation of a Coxeter zonotope together with its arrangement.
 */
typedef struct PaPolytope PaPolytope;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread. Valid until the next call
 * into this library from the same thread. Never null.
 */
const char *pa_last_error_message(void);

/**
 * Releases a string returned by this library. Null is accepted.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void pa_string_free(char *s);

/**
 * Builds arrangement `kind` ("A", "B" or "C") of rank `d`.
 *
 * # Safety
 * `kind` must be a nul-terminated string and `out` a valid pointer.
 */
enum PaStatus pa_arrangement_new(const char *kind, size_t d, struct PaArrangement **out);

/**
 * Releases an arrangement handle. Null is accepted.
 *
 * # Safety
 * `a` must come from [`pa_arrangement_new`] and not have been freed.
 */
void pa_arrangement_free(struct PaArrangement *a);

/**
 * Number of faces, flats and chambers; any `out` may be null.
 *
 * # Safety
 * `a` must be a live handle; non-null outputs must be valid pointers.
 */
enum PaStatus pa_arrangement_counts(const struct PaArrangement *a,
                                    size_t *faces,
                                    size_t *flats,
                                    size_t *chambers);

/**
 * `η_X(Ξ_r)` for the flat written as `flat` (e.g. "{12,3}" or "X_{1,3}").
 *
 * # Safety
 * `a` must be a live handle, `flat` a nul-terminated string, `out` valid.
 */
enum PaStatus pa_arrangement_eta(struct PaArrangement *a,
                                 const char *flat,
                                 size_t r,
                                 uint64_t *out);

/**
 * Parses `{"arrangement": "A", "d": 3, "points": [["1/2", ...], ...]}` and
 * checks that the points span a deformation.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` a valid pointer.
 */
enum PaStatus pa_polytope_from_json(const char *json, struct PaPolytope **out);

/**
 * Releases a polytope handle. Null is accepted.
 *
 * # Safety
 * `p` must come from [`pa_polytope_from_json`] and not have been freed.
 */
void pa_polytope_free(struct PaPolytope *p);

/**
 * Number of distinct vertices and affine dimension.
 *
 * # Safety
 * `p` must be a live handle; non-null outputs must be valid pointers.
 */
enum PaStatus pa_polytope_shape(const struct PaPolytope *p, size_t *vertices, size_t *dim);

/**
 * Lattice volume as an exact rational string such as "27/48".
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum PaStatus pa_polytope_volume(const struct PaPolytope *p, char **out);

/**
 * Coefficients of the h-polynomial, lowest degree first. Writes at most
 * `cap` values to `buf` and the full length to `len`. A null `buf` with
 * `cap == 0` queries the length.
 *
 * # Safety
 * `p` must be a live handle, `buf` valid for `cap` writes, `len` valid.
 */
enum PaStatus pa_polytope_h_vector(const struct PaPolytope *p,
                                   int64_t *buf,
                                   size_t cap,
                                   size_t *len);

/**
 * Signed Minkowski decomposition into simplices as a JSON object
 * `{generator: "coeff"}`. Braid and type B arrangements only.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum PaStatus pa_polytope_decompose_json(const struct PaPolytope *p, char **out);

/**
 * Runs `polyalg verify <suite> [--d d] --seed seed` and returns its JSON
 * report. `d == 0` selects the suite default. Returns
 * `PA_STATUS_VERIFICATION_FAILED` when a check fails; the report is still
 * written.
 *
 * # Safety
 * `suite` must be a nul-terminated string and `out` a valid pointer.
 */
enum PaStatus pa_verify_json(const char *suite, size_t d, uint64_t seed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* POLYTOPE_ALGEBRA_H */
