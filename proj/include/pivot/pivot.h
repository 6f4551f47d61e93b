#ifndef PIVOT_PIVOT_H
#define PIVOT_PIVOT_H

/* C interface to the pivot library. Objects are opaque handles, every
 * operation reports a status code, and all returned strings are owned by
 * the caller and released with pivot_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define PIVOT_API __attribute__((visibility("default")))
#else
#define PIVOT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pivot_status {
    PIVOT_OK = 0,
    PIVOT_ERROR = 1,             /* domain error: shape, singularity, ... */
    PIVOT_PARSE_ERROR = 2,       /* malformed text or field descriptor */
    PIVOT_SINGULAR_PIVOT = 3,    /* principal block A[Z,Z] not invertible */
    PIVOT_SIZE_CAP_EXCEEDED = 4, /* enumeration size cap hit */
    PIVOT_UNKNOWN_LABEL = 5,     /* label or vertex not in the index set */
    PIVOT_BAD_ARGUMENT = 6       /* null handle or out pointer */
} pivot_status;

typedef enum pivot_poly_kind { PIVOT_POLY_P = 0, PIVOT_POLY_Q = 1 } pivot_poly_kind;

typedef struct pivot_matrix pivot_matrix;
typedef struct pivot_graph pivot_graph;

PIVOT_API const char* pivot_version(void);

/* Message for the most recent failure on this thread; valid until the next
 * library call on the same thread. */
PIVOT_API const char* pivot_last_error(void);

PIVOT_API void pivot_string_free(char* s);

/* ---- matrices; text format as documented for the library ---- */

PIVOT_API pivot_status pivot_matrix_parse(const char* text, pivot_matrix** out);
PIVOT_API pivot_status pivot_matrix_print(const pivot_matrix* m, char** out);
PIVOT_API void pivot_matrix_free(pivot_matrix* m);

PIVOT_API pivot_status pivot_matrix_equal(const pivot_matrix* a, const pivot_matrix* b,
                                          int* out);
PIVOT_API pivot_status pivot_matrix_rank(const pivot_matrix* m, size_t* out);
PIVOT_API pivot_status pivot_matrix_nullity(const pivot_matrix* m, size_t* out);

/* Label-set arguments are comma-separated label lists; "" is the empty set. */
PIVOT_API pivot_status pivot_ppt(const pivot_matrix* m, const char* pivot_set,
                                 pivot_matrix** out);
PIVOT_API pivot_status pivot_schur(const pivot_matrix* m, const char* pivot_set,
                                   pivot_matrix** out);
PIVOT_API pivot_status pivot_sharp(const pivot_matrix* m, const char* pivot_set,
                                   pivot_matrix** out);

/* Nullity polynomial of a square matrix. max_size of 0 keeps the library
 * hard cap; the hard cap applies regardless of larger requests. Either
 * output may be NULL: display is the human form, coeffs the space-separated
 * coefficient list from degree 0 upward. */
PIVOT_API pivot_status pivot_nullity_polynomial(const pivot_matrix* m, pivot_poly_kind kind,
                                                size_t max_size, char** display,
                                                char** coeffs);

/* ---- graphs ---- */

PIVOT_API pivot_status pivot_graph_parse(const char* text, pivot_graph** out);
PIVOT_API pivot_status pivot_graph_print(const pivot_graph* g, char** out);
PIVOT_API void pivot_graph_free(pivot_graph* g);

PIVOT_API pivot_status pivot_graph_local_complement(const pivot_graph* g, const char* vertex,
                                                    pivot_graph** out);
PIVOT_API pivot_status pivot_graph_cut_rank(const pivot_graph* g, const char* side,
                                            size_t* out);
PIVOT_API pivot_status pivot_graph_adjacency(const pivot_graph* g, pivot_matrix** out);

/* ---- verification harness ---- */

typedef struct pivot_verify_options {
    const char* field;  /* "GF(2)", "GF(p)" or "Q"; NULL = GF(2), GF(3) and Q */
    uint64_t seed;
    size_t max_size;    /* cap on generated |V|; 0 = per-suite defaults */
    size_t samples;     /* random sample count override; 0 = defaults */
    const char* suites; /* comma-separated suite names; NULL or "" = all */
} pivot_verify_options;

/* Runs the harness. report receives the text report; all_ok is 1 when every
 * suite passed. options may be NULL for the default configuration with
 * seed 42. */
PIVOT_API pivot_status pivot_verify(const pivot_verify_options* options, char** report,
                                    int* all_ok);

#ifdef __cplusplus
}
#endif

#endif
