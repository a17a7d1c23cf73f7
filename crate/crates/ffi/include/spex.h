#ifndef SPEX_H
#define SPEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpexStatus {
  SPEX_STATUS_OK = 0,
  SPEX_STATUS_NULL_POINTER = 1,
  SPEX_STATUS_INVALID_UTF8 = 2,
  SPEX_STATUS_INVALID_EDGE = 3,
  SPEX_STATUS_FORMAT = 4,
  SPEX_STATUS_INVALID_PARAMETER = 5,
  SPEX_STATUS_INVALID_INPUT = 6,
  SPEX_STATUS_CONVERGENCE = 7,
  SPEX_STATUS_BUFFER_TOO_SMALL = 8,
  SPEX_STATUS_PANIC = 9,
  SPEX_STATUS_OTHER = 10,
} SpexStatus;

/**
 * Opaque graph handle.
 */
typedef struct SpexGraph SpexGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *spex_last_error(void);

/**
 * Parses a graph6 string.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a writable pointer.
 */
enum SpexStatus spex_graph_from_graph6(const char *text, struct SpexGraph **out);

/**
 * Builds a graph on `n` vertices from `m` edges stored as `2m` endpoint
 * ids `[u0, v0, u1, v1, ...]`.
 *
 * # Safety
 * `endpoints` must point to `2 * m` readable values (it may be null when
 * `m == 0`) and `out` must be writable.
 */
enum SpexStatus spex_graph_from_edges(size_t n,
                                      const size_t *endpoints,
                                      size_t m,
                                      struct SpexGraph **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must come from this library and not have been freed.
 */
void spex_graph_free(struct SpexGraph *g);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void spex_string_free(char *s);

/**
 * Vertex count.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SpexStatus spex_graph_order(const struct SpexGraph *g, size_t *out);

/**
 * Edge count.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SpexStatus spex_graph_size(const struct SpexGraph *g, size_t *out);

/**
 * graph6 encoding in the handle's labeling; free with [`spex_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SpexStatus spex_graph_to_graph6(const struct SpexGraph *g, char **out);

/**
 * Canonical graph6: equal for two graphs exactly when they are
 * isomorphic. Free with [`spex_string_free`].
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SpexStatus spex_graph_canonical_graph6(const struct SpexGraph *g, char **out);

/**
 * Largest signless Laplacian eigenvalue, solved to residual `tol`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SpexStatus spex_q_radius(const struct SpexGraph *g, double tol, double *out);

/**
 * Writes the unit Perron vector into `buf`, which must hold at least
 * the vertex count; `q` receives the eigenvalue when non-null.
 *
 * # Safety
 * `g` must be a live handle, `buf` must point to `len` writable doubles
 * and `q` must be null or writable.
 */
enum SpexStatus spex_perron(const struct SpexGraph *g,
                            double tol,
                            double *buf,
                            size_t len,
                            double *q);

/**
 * Shortest cycle length, or 0 for a forest.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SpexStatus spex_girth(const struct SpexGraph *g, size_t *out);

/**
 * Longest cycle length, or 0 for a forest.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SpexStatus spex_circumference(const struct SpexGraph *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
enum SpexStatus spex_clique_number(const struct SpexGraph *g, size_t *out);

/**
 * `max_u (d(u) + m(u))` over a connected graph, with `m(u)` the mean
 * neighbor degree. `tight` (if non-null) is set when the bound equals q.
 *
 * # Safety
 * `g` must be a live handle, `out` writable and `tight` null or writable.
 */
enum SpexStatus spex_average_degree_bound(const struct SpexGraph *g, double *out, bool *tight);

/**
 * The cycle C_g with m - g pendant edges at one vertex.
 *
 * # Safety
 * `out` must be writable.
 */
enum SpexStatus spex_girth_extremal(size_t m, size_t g, struct SpexGraph **out);

/**
 * The cycle C_c with one vertex joined to all others on the cycle and
 * m - 2c + 3 pendant edges there.
 *
 * # Safety
 * `out` must be writable.
 */
enum SpexStatus spex_circumference_extremal(size_t m, size_t c, struct SpexGraph **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPEX_H */
