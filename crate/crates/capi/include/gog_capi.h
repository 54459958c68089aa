#ifndef GOG_CAPI_H
#define GOG_CAPI_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum GogStatus {
  GOG_STATUS_OK = 0,
  GOG_STATUS_NULL_ARGUMENT = 1,
  GOG_STATUS_PARSE_ERROR = 2,
  GOG_STATUS_DOMAIN_ERROR = 3,
  GOG_STATUS_PANIC = 4,
} GogStatus;

/**
 * Opaque handle to a folded subgroup graph.
 */
typedef struct GogGraph GogGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the last error message for this thread, or NULL if none.
 * The caller owns the returned string (release with `gog_string_free`).
 */
char *gog_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 */
void gog_string_free(char *s);

/**
 * Builds the folded core graph of the subgroup generated by `n_words`
 * NUL-terminated words (lowercase generators, uppercase inverses) over
 * `rank` generators. On success writes a new handle to `out`.
 */
enum GogStatus gog_graph_from_words(uint32_t rank,
                                    const char *const *words,
                                    uintptr_t n_words,
                                    struct GogGraph **out);

/**
 * Releases a graph handle. NULL is ignored.
 */
void gog_graph_free(struct GogGraph *g);

/**
 * Ambient rank (number of generators of the free group).
 */
uint32_t gog_graph_ambient_rank(const struct GogGraph *g);

uint64_t gog_graph_num_vertices(const struct GogGraph *g);

uint64_t gog_graph_num_edges(const struct GogGraph *g);

/**
 * Euler characteristic (vertices minus edges).
 */
int64_t gog_graph_euler(const struct GogGraph *g);

/**
 * Rank of the subgroup the graph represents (0 for the trivial subgroup).
 */
int64_t gog_graph_subgroup_rank(const struct GogGraph *g);

/**
 * Membership test. Writes 1 to `out` if `word` lies in the subgroup,
 * 0 otherwise.
 */
enum GogStatus gog_graph_contains(const struct GogGraph *g, const char *word, int32_t *out);

/**
 * Intersection H₁ ∩ H₂ (the based fiber-product component).
 */
enum GogStatus gog_graph_intersect(const struct GogGraph *g1,
                                   const struct GogGraph *g2,
                                   struct GogGraph **out);

/**
 * Join ⟨H₁ ∪ H₂⟩.
 */
enum GogStatus gog_graph_join(const struct GogGraph *g1,
                              const struct GogGraph *g2,
                              struct GogGraph **out);

/**
 * Line-based text serialization of the graph. The caller owns the string.
 */
enum GogStatus gog_graph_to_text(const struct GogGraph *g, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GOG_CAPI_H */
