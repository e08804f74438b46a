/* C API for the t-tone edge coloring library.
 *
 * All functions return a ttone_status; results travel through out-parameters.
 * Strings returned through char** are heap-allocated; release them with
 * ttone_string_free. Handles are opaque; release them with the matching
 * *_free call. On any failure ttone_last_error() describes the problem for
 * the calling thread.
 */
#ifndef TTONE_H
#define TTONE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ttone_status {
    TTONE_OK = 0,
    TTONE_INVALID = 1,       /* invalid coloring / class hypothesis violated */
    TTONE_INPUT_ERROR = 2,   /* malformed input, unknown name, bad arguments */
    TTONE_LIMIT = 3,         /* node or time limit fired before a decision */
    TTONE_UNSUPPORTED = 4,   /* well-formed input outside the supported range */
    TTONE_INTERNAL_ERROR = 5 /* a guaranteed step failed; indicates a bug */
} ttone_status;

typedef struct ttone_graph ttone_graph;
typedef struct ttone_coloring ttone_coloring;

const char* ttone_version(void);
const char* ttone_last_error(void);
void ttone_string_free(char* s);

/* ---- graphs ---- */
ttone_status ttone_graph_from_graph6(const char* text, ttone_graph** out);
ttone_status ttone_graph_from_edgelist(const char* text, ttone_graph** out);
ttone_status ttone_graph_catalog(const char* name, ttone_graph** out);
void ttone_graph_free(ttone_graph* g);

int ttone_graph_order(const ttone_graph* g);
int ttone_graph_size(const ttone_graph* g);
ttone_status ttone_graph_to_graph6(const ttone_graph* g, char** out);
ttone_status ttone_graph_to_edgelist(const ttone_graph* g, char** out);

/* ---- classification and bounds ---- */
ttone_status ttone_classify_text(const ttone_graph* g, char** out);

/* format: "table" or "kv" */
ttone_status ttone_bounds_text(const ttone_graph* g, int t, const char* format, char** out);

/* ---- colorings ---- */
ttone_status ttone_coloring_parse(const char* text, ttone_coloring** out);
ttone_status ttone_coloring_to_text(const ttone_coloring* c, char** out);
void ttone_coloring_free(ttone_coloring* c);
int ttone_coloring_t(const ttone_coloring* c);
int ttone_coloring_k(const ttone_coloring* c);

/* Violations, one per line, in *violations (empty string when valid).
 * *count receives the number of violations. Status stays TTONE_OK for a
 * well-formed check whose result is "invalid"; inspect *count. */
ttone_status ttone_verify(const ttone_graph* g, const ttone_coloring* c, char** violations,
                          size_t* count);

/* ---- exact solver ---- */
/* Nonpositive node_limit/time_limit_ms mean unlimited. On TTONE_LIMIT the
 * bracket out-parameters hold the refuted/known bounds (hi -1 if none). */
ttone_status ttone_exact_index(const ttone_graph* g, int t, long long node_limit,
                               long long time_limit_ms, int* index, ttone_coloring** witness,
                               int* bracket_lo, int* bracket_hi);

/* ---- constructive colorers ---- */
/* strategy: auto | tree_exact | subcubic_outerplanar | sp_subcubic |
 * degen2_subcubic | clawfree_subcubic | outerplanar | planar | t1_6d4 | exact.
 * trace_doc (optional) receives the coloring document with the audit trace. */
ttone_status ttone_color(const ttone_graph* g, const char* strategy, ttone_coloring** out,
                         int* k_used, int* fallback_used, char** trace_doc);

/* ---- extremal search ---- */
/* forbid: comma-separated subset of "k4,k4me,claw" (may be empty or NULL).
 * graph6_stream: newline-delimited graph6 input replacing enumeration (NULL
 * to enumerate). Outputs one tab-separated line per finding:
 * n, canonical graph6, index, status. */
ttone_status ttone_search(int max_n, const char* forbid, int t, int threshold, int jobs,
                          long long node_limit, const char* graph6_stream, char** findings_tsv,
                          char** witness_docs);

#ifdef __cplusplus
}
#endif

#endif
