#ifndef FPT_FPT_H
#define FPT_FPT_H

/* C interface to the finite-space fixed point toolkit.
 *
 * Every entry point is deterministic: the same inputs produce the same
 * outputs on every run and every platform. Strings returned through
 * out-parameters are heap-allocated UTF-8 and must be released with
 * fpt_string_free. All functions are safe to call from multiple threads
 * as long as each handle is confined to one thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Exit and status codes shared with the command line driver. */
#define FPT_OK 0                /* property holds / operation succeeded */
#define FPT_REFUTED 1           /* property refuted, witness in report */
#define FPT_INPUT_ERROR 2       /* malformed input, message says where */
#define FPT_INCONCLUSIVE 3      /* search budget exhausted */
#define FPT_INTERNAL_ERROR 4    /* invariant violation, please report */

/* Library version, static storage, do not free. */
const char* fpt_version(void);

/* Release a string returned by any fpt_* out-parameter. NULL is a no-op. */
void fpt_string_free(char* s);

/* Run one command line invocation. argv holds argc UTF-8 arguments,
 * excluding the program name (so {"homology", "disk.scx"} has argc 2).
 * On return *report_json holds the newline-terminated JSON report and
 * *human_text the human-readable summary; either pointer may be NULL if
 * the caller does not want that stream. The return value is the exit
 * code (FPT_OK .. FPT_INTERNAL_ERROR). */
int fpt_dispatch(int argc, const char* const* argv, char** report_json,
                 char** human_text);

/* Opaque handles over the core types. */
typedef struct fpt_complex fpt_complex;
typedef struct fpt_poset fpt_poset;

/* Parse a complex from JSON text ({"facets": [...], "labels": {...}}).
 * Returns NULL on failure; when error is non-NULL it receives a message. */
fpt_complex* fpt_complex_parse(const char* json_text, char** error);
void fpt_complex_free(fpt_complex* K);
int fpt_complex_dim(const fpt_complex* K);
size_t fpt_complex_vertex_count(const fpt_complex* K);
size_t fpt_complex_facet_count(const fpt_complex* K);
/* Canonical JSON form, newline terminated. */
char* fpt_complex_to_json(const fpt_complex* K);
/* Barycentric subdivision, iterated rounds times. */
fpt_complex* fpt_complex_subdivide(const fpt_complex* K, int rounds);
/* Simplices ordered by inclusion. */
fpt_poset* fpt_complex_face_poset(const fpt_complex* K);

/* Parse a poset from JSON text ({"points": [...], "covers": [...]}).
 * repair nonzero drops transitively implied covers instead of failing. */
fpt_poset* fpt_poset_parse(const char* json_text, int repair, char** error);
void fpt_poset_free(fpt_poset* X);
size_t fpt_poset_point_count(const fpt_poset* X);
char* fpt_poset_to_json(const fpt_poset* X);
/* Complex of totally ordered subsets. */
fpt_complex* fpt_poset_order_complex(const fpt_poset* X);
/* Beat-point removal to a minimal representative. */
fpt_poset* fpt_poset_core(const fpt_poset* X);

/* Exhaustive fixed point property check. Returns FPT_OK when every
 * monotone self-map has a fixed point, FPT_REFUTED when a free self-map
 * exists, FPT_INCONCLUSIVE when max_nodes was exhausted. When report is
 * non-NULL it receives a JSON certificate. */
int fpt_poset_fpp(const fpt_poset* X, long long max_nodes, char** report);

/* Exhaustive fixed simplex property check, same convention. */
int fpt_complex_fsp(const fpt_complex* K, long long max_nodes, char** report);

#ifdef __cplusplus
}
#endif

#endif /* FPT_FPT_H */
