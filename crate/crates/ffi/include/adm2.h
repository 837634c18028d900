#ifndef ADM2_H
#define ADM2_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Result codes. `ADM2_STATUS_OK` is zero; every other value is an error.
typedef enum Adm2Status {
  ADM2_STATUS_OK = 0,
  ADM2_STATUS_NULL_POINTER = 1,
  ADM2_STATUS_INVALID_ARGUMENT = 2,
  ADM2_STATUS_PARSE = 3,
  ADM2_STATUS_IO = 4,
  ADM2_STATUS_INVALID_ORDERING = 5,
  ADM2_STATUS_TIMED_OUT = 6,
  ADM2_STATUS_BUFFER_TOO_SMALL = 7,
  ADM2_STATUS_PANIC = 8,
} Adm2Status;

// A simple undirected graph.
typedef struct Adm2Graph Adm2Graph;

// A vertex ordering, read from left to right.
typedef struct Adm2Ordering Adm2Ordering;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
// `edges` (`u0, v0, u1, v1, ...`). Self-loops and repeated edges are
// dropped.
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (or may be null
// when `edge_count` is zero). `out` must be a valid pointer.
enum Adm2Status adm2_graph_from_edges(size_t n,
                                      const size_t *edges,
                                      size_t edge_count,
                                      struct Adm2Graph **out);

// Loads a graph from an edge-list file.
//
// # Safety
// `path` must be a nul-terminated string and `out` a valid pointer.
enum Adm2Status adm2_graph_load_edge_list(const char *path, struct Adm2Graph **out);

// Releases a graph. Null is ignored.
//
// # Safety
// `graph` must come from this library and not have been freed.
void adm2_graph_free(struct Adm2Graph *graph);

// Number of vertices, or 0 for a null graph.
//
// # Safety
// `graph` must be null or a live handle.
size_t adm2_graph_vertex_count(const struct Adm2Graph *graph);

// Number of edges, or 0 for a null graph.
//
// # Safety
// `graph` must be null or a live handle.
size_t adm2_graph_edge_count(const struct Adm2Graph *graph);

// Writes the degeneracy of `graph` to `out_value`.
//
// # Safety
// `graph` must be a live handle and `out_value` a valid pointer.
enum Adm2Status adm2_graph_degeneracy(const struct Adm2Graph *graph, size_t *out_value);

// Decides whether the 2-admissibility of `graph` is at most `p`.
//
// `out_answer` receives the answer. When `out_witness` is non-null it
// receives an ordering of 2-admissibility at most `p` on a yes answer and
// null otherwise. A `timeout_ms` of 0 means no limit; on expiry the call
// returns `ADM2_STATUS_TIMED_OUT`.
//
// # Safety
// `graph` must be a live handle, `out_answer` a valid pointer and
// `out_witness` null or a valid pointer.
enum Adm2Status adm2_decide(const struct Adm2Graph *graph,
                            size_t p,
                            uint64_t timeout_ms,
                            bool *out_answer,
                            struct Adm2Ordering **out_witness);

// Computes the exact 2-admissibility of `graph` into `out_value`, with an
// optimal ordering in `out_witness` when that is non-null.
//
// # Safety
// As for [`adm2_decide`].
enum Adm2Status adm2_compute(const struct Adm2Graph *graph,
                             uint64_t timeout_ms,
                             size_t *out_value,
                             struct Adm2Ordering **out_witness);

// Number of vertices in an ordering, or 0 for null.
//
// # Safety
// `ordering` must be null or a live handle.
size_t adm2_ordering_len(const struct Adm2Ordering *ordering);

// Copies the ordering into `buffer`, which holds `capacity` values.
//
// # Safety
// `ordering` must be a live handle and `buffer` must have room for
// `capacity` values.
enum Adm2Status adm2_ordering_copy(const struct Adm2Ordering *ordering,
                                   size_t *buffer,
                                   size_t capacity);

// Releases an ordering. Null is ignored.
//
// # Safety
// `ordering` must come from this library and not have been freed.
void adm2_ordering_free(struct Adm2Ordering *ordering);

// Writes the 2-admissibility of `graph` under the vertex sequence
// `order[0..len]` to `out_value`. The sequence must list every vertex once.
//
// # Safety
// `graph` must be a live handle, `order` must point to `len` readable
// values (or may be null when `len` is zero) and `out_value` must be valid.
enum Adm2Status adm2_verify_ordering(const struct Adm2Graph *graph,
                                     const size_t *order,
                                     size_t len,
                                     size_t *out_value);

// The message for the most recent failure on this thread, or null if none.
// The pointer stays valid until the next failing call on the same thread.
const char *adm2_last_error_message(void);

// A static description of a status code.
const char *adm2_status_str(enum Adm2Status status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ADM2_H */
