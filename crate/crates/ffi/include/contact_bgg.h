#pragma once

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by fallible calls.
 */
typedef enum CbggStatus {
  CBGG_STATUS_OK = 0,
  CBGG_STATUS_NULL_POINTER = 1,
  CBGG_STATUS_INVALID_INPUT = 2,
  CBGG_STATUS_RESOURCE = 3,
  CBGG_STATUS_BUFFER_TOO_SMALL = 4,
  CBGG_STATUS_PANIC = 5,
} CbggStatus;

/**
 * An absolute or relative BGG diagram.
 */
typedef struct CbggBgg CbggBgg;

/**
 * A (possibly relative) Hasse diagram.
 */
typedef struct CbggHasse CbggHasse;

/**
 * A parabolic subalgebra given by crossed nodes.
 */
typedef struct CbggParabolic CbggParabolic;

/**
 * A root system of type A, B, C or D.
 */
typedef struct CbggRootSystem CbggRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *cbgg_last_error(void);

/**
 * Frees a string returned by one of the `*_to_json` functions.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void cbgg_string_free(char *s);

/**
 * Builds the root system named by `algebra`, e.g. "C3".
 *
 * # Safety
 * `algebra` must be a NUL-terminated string and `out` a valid pointer.
 */
enum CbggStatus cbgg_root_system_new(const char *algebra, struct CbggRootSystem **out);

/**
 * # Safety
 * `rs` must be NULL or a handle from [`cbgg_root_system_new`].
 */
void cbgg_root_system_free(struct CbggRootSystem *rs);

/**
 * Rank of the root system, or 0 for NULL.
 *
 * # Safety
 * `rs` must be NULL or a live handle.
 */
size_t cbgg_root_system_rank(const struct CbggRootSystem *rs);

/**
 * Number of positive roots, or 0 for NULL.
 *
 * # Safety
 * `rs` must be NULL or a live handle.
 */
size_t cbgg_root_system_positive_root_count(const struct CbggRootSystem *rs);

/**
 * Dimension of the irreducible representation with highest weight given in
 * fundamental-weight coordinates.
 *
 * # Safety
 * `rs` must be a live handle, `num` (and `den` unless NULL) must hold `len`
 * entries, and `out` must be valid.
 */
enum CbggStatus cbgg_weyl_dim(const struct CbggRootSystem *rs,
                              const int64_t *num,
                              const int64_t *den,
                              size_t len,
                              uint64_t *out);

/**
 * Builds the parabolic with the given 1-based crossed nodes. The root system
 * handle may be freed afterwards.
 *
 * # Safety
 * `rs` must be a live handle, `crossed` must hold `len` entries and `out`
 * must be valid.
 */
enum CbggStatus cbgg_parabolic_new(const struct CbggRootSystem *rs,
                                   const uint32_t *crossed,
                                   size_t len,
                                   struct CbggParabolic **out);

/**
 * # Safety
 * `p` must be NULL or a handle from [`cbgg_parabolic_new`].
 */
void cbgg_parabolic_free(struct CbggParabolic *p);

/**
 * Whether the parabolic defines a contact grading.
 *
 * # Safety
 * `p` must be NULL or a live handle.
 */
bool cbgg_parabolic_is_contact(const struct CbggParabolic *p);

/**
 * Hasse diagram of `p`.
 *
 * # Safety
 * `p` must be a live handle and `out` valid.
 */
enum CbggStatus cbgg_hasse_new(const struct CbggParabolic *p, struct CbggHasse **out);

/**
 * Relative Hasse diagram for `q` contained in `p` (crossed nodes of `p` a
 * subset of those of `q`).
 *
 * # Safety
 * `p` and `q` must be live handles and `out` valid.
 */
enum CbggStatus cbgg_relative_hasse_new(const struct CbggParabolic *p,
                                        const struct CbggParabolic *q,
                                        struct CbggHasse **out);

/**
 * # Safety
 * `h` must be NULL or a Hasse handle.
 */
void cbgg_hasse_free(struct CbggHasse *h);

/**
 * Number of elements, or 0 for NULL.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
size_t cbgg_hasse_len(const struct CbggHasse *h);

/**
 * Number of cover edges, or 0 for NULL.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
size_t cbgg_hasse_edge_count(const struct CbggHasse *h);

/**
 * Writes the number of elements of each length into `buf`. `*len_out`
 * always receives the required length; if it exceeds `cap` nothing is
 * written and `BufferTooSmall` is returned.
 *
 * # Safety
 * `h` must be a live handle, `buf` must have room for `cap` entries and
 * `len_out` must be valid.
 */
enum CbggStatus cbgg_hasse_length_counts(const struct CbggHasse *h,
                                         uint64_t *buf,
                                         size_t cap,
                                         size_t *len_out);

/**
 * JSON document for the diagram; free with [`cbgg_string_free`]. NULL for a
 * NULL handle.
 *
 * # Safety
 * `h` must be NULL or a live handle.
 */
char *cbgg_hasse_to_json(const struct CbggHasse *h);

/**
 * Builds the BGG diagram of `p` with highest weight `num/den`. `group` names
 * the center character to check ("adjoint-C", "adjoint-A-even",
 * "su-center:m") or is NULL to skip the check.
 *
 * # Safety
 * `p` must be a live handle, the weight arrays must hold `len` entries,
 * `group` must be NULL or NUL-terminated, and `out` must be valid.
 */
enum CbggStatus cbgg_bgg_new(const struct CbggParabolic *p,
                             const int64_t *num,
                             const int64_t *den,
                             size_t len,
                             const char *group,
                             struct CbggBgg **out);

/**
 * Builds the relative BGG diagram for `q` contained in `p`.
 *
 * # Safety
 * As for [`cbgg_bgg_new`], with `q` a live handle.
 */
enum CbggStatus cbgg_relative_bgg_new(const struct CbggParabolic *p,
                                      const struct CbggParabolic *q,
                                      const int64_t *num,
                                      const int64_t *den,
                                      size_t len,
                                      struct CbggBgg **out);

/**
 * # Safety
 * `d` must be NULL or a BGG handle.
 */
void cbgg_bgg_free(struct CbggBgg *d);

/**
 * Number of nodes, or 0 for NULL.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
size_t cbgg_bgg_node_count(const struct CbggBgg *d);

/**
 * Number of edges, or 0 for NULL.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
size_t cbgg_bgg_edge_count(const struct CbggBgg *d);

/**
 * Degree and dimension of node `i`.
 *
 * # Safety
 * `d` must be a live handle; `degree` and `dim` must be valid.
 */
enum CbggStatus cbgg_bgg_node(const struct CbggBgg *d, size_t i, size_t *degree, uint64_t *dim);

/**
 * Endpoints and weighted order of edge `i`.
 *
 * # Safety
 * `d` must be a live handle; the output pointers must be valid.
 */
enum CbggStatus cbgg_bgg_edge(const struct CbggBgg *d,
                              size_t i,
                              size_t *from,
                              size_t *to,
                              uint64_t *order);

/**
 * Integrability of the highest weight: 1 integrable, 0 not, -1 unchecked.
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
int32_t cbgg_bgg_integrable(const struct CbggBgg *d);

/**
 * JSON document for the diagram; free with [`cbgg_string_free`].
 *
 * # Safety
 * `d` must be NULL or a live handle.
 */
char *cbgg_bgg_to_json(const struct CbggBgg *d);

/**
 * Graded dimensions of the descended cohomology in degrees 0..=dim_m+1.
 * `lefschetz_ranks` may be NULL when `n_ranks` is 0. `*len_out` always
 * receives dim_m + 2 on valid input.
 *
 * # Safety
 * The input arrays must hold the stated number of entries, `buf` must have
 * room for `cap` entries and `len_out` must be valid.
 */
enum CbggStatus cbgg_descended_cohomology(size_t dim_m,
                                          const uint64_t *betti,
                                          size_t n_betti,
                                          const uint64_t *lefschetz_ranks,
                                          size_t n_ranks,
                                          uint64_t w1,
                                          uint64_t *buf,
                                          size_t cap,
                                          size_t *len_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
