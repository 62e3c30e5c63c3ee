#ifndef RECTSUB_H
#define RECTSUB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define RS_PROBLEM_STAB 0

#define RS_PROBLEM_MIS 1

#define RS_PROBLEM_MDS 2

#define RS_FACES_ALL 0

#define RS_FACES_RECT 1

#define RS_ALGO_GREEDY 0

#define RS_ALGO_EXACT 1

#define RS_ALGO_LOCAL 2

/**
 * Result code of every fallible call.
 */
typedef enum RsStatus {
  RS_STATUS_OK = 0,
  RS_STATUS_NULL_POINTER = 1,
  RS_STATUS_INVALID_UTF8 = 2,
  RS_STATUS_PARSE_ERROR = 3,
  RS_STATUS_GEOMETRY_ERROR = 4,
  RS_STATUS_INVALID_ARGUMENT = 5,
  RS_STATUS_REDUCTION_ERROR = 6,
  RS_STATUS_PANIC = 7,
} RsStatus;

/**
 * Opaque handle to a compiled formula.
 */
typedef struct RsReduction RsReduction;

/**
 * Opaque subdivision handle.
 */
typedef struct RsSubdivision RsSubdivision;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread; do not free it.
 */
const char *rs_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string obtained from this library, not yet freed.
 */
void rs_string_free(char *s);

/**
 * Parses `.segs` text and builds its subdivision.
 *
 * # Safety
 * `segs` must be a NUL-terminated string; `out` must be valid for writes.
 */
enum RsStatus rs_subdivision_from_segs(const char *segs, struct RsSubdivision **out);

/**
 * # Safety
 * `h` must be null or a handle from [`rs_subdivision_from_segs`], not yet freed.
 */
void rs_subdivision_free(struct RsSubdivision *h);

/**
 * Number of bounded faces; 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t rs_subdivision_face_count(const struct RsSubdivision *h);

/**
 * Number of vertices; 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t rs_subdivision_vertex_count(const struct RsSubdivision *h);

/**
 * Solves `problem` with `algo` and writes a solution document (JSON).
 * `k` is the swap size for local search and ignored otherwise.
 *
 * # Safety
 * `h` must be a live handle; `json_out` must be valid for writes.
 */
enum RsStatus rs_solve(const struct RsSubdivision *h,
                       uint32_t problem_code,
                       uint32_t algo,
                       uint32_t faces,
                       size_t k,
                       uint64_t node_limit,
                       double time_limit_seconds,
                       char **json_out);

/**
 * Checks a solution document against the subdivision; writes 1 to
 * `feasible_out` when feasible, 0 otherwise.
 *
 * # Safety
 * `h` must be a live handle, `solution_json` a NUL-terminated string and
 * `feasible_out` valid for writes.
 */
enum RsStatus rs_verify(const struct RsSubdivision *h,
                        uint32_t problem_code,
                        uint32_t faces,
                        const char *solution_json,
                        int *feasible_out);

/**
 * Renders the subdivision as SVG, overlaying `solution_json` when non-null.
 *
 * # Safety
 * `h` must be a live handle, `solution_json` null or NUL-terminated, and
 * `svg_out` valid for writes.
 */
enum RsStatus rs_render_svg(const struct RsSubdivision *h,
                            const char *solution_json,
                            char **svg_out);

/**
 * Compiles a formula document into a hardness instance.
 *
 * # Safety
 * `formula_json` must be NUL-terminated; `out` must be valid for writes.
 */
enum RsStatus rs_reduce(const char *formula_json,
                        uint32_t problem_code,
                        uint32_t variant,
                        struct RsReduction **out);

/**
 * # Safety
 * `h` must be null or a handle from [`rs_reduce`], not yet freed.
 */
void rs_reduction_free(struct RsReduction *h);

/**
 * Target optimum of the compiled instance; 0 for a null handle.
 *
 * # Safety
 * `h` must be null or a live handle.
 */
size_t rs_reduction_target(const struct RsReduction *h);

/**
 * `.segs` text of the compiled instance.
 *
 * # Safety
 * `h` must be a live handle; `segs_out` must be valid for writes.
 */
enum RsStatus rs_reduction_segments(const struct RsReduction *h, char **segs_out);

/**
 * Manifest, target and canonical solutions as a JSON report.
 *
 * # Safety
 * `h` must be a live handle; `json_out` must be valid for writes.
 */
enum RsStatus rs_reduction_report(const struct RsReduction *h, char **json_out);

/**
 * Runs the exhaustive lemma check and writes its report (JSON).
 *
 * # Safety
 * `formula_json` must be NUL-terminated; `json_out` must be valid for writes.
 */
enum RsStatus rs_verify_lemma(const char *formula_json,
                              uint32_t problem_code,
                              uint32_t variant,
                              uint64_t node_limit,
                              double time_limit_seconds,
                              char **json_out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* RECTSUB_H */
