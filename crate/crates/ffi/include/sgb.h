#ifndef SGB_H
#define SGB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Success.
 */
#define SGB_OK 0

/**
 * A required pointer argument was null.
 */
#define SGB_ERR_NULL -1

/**
 * An argument was not valid UTF-8.
 */
#define SGB_ERR_UTF8 -2

/**
 * Input could not be parsed; details via `sgb_last_error_message`.
 */
#define SGB_ERR_PARSE -3

/**
 * The computation failed; details via `sgb_last_error_message`.
 */
#define SGB_ERR_MATH -4

/**
 * An opaque handle bundling the coefficient ring, the variable names, the
 * number of vector components and the admissible order.
 */
typedef struct SgbContext SgbContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message of the most recent error on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *sgb_last_error_message(void);

/**
 * Creates a context. `ring` is "Z" or "Q", `vars` a comma separated list
 * of variable names, `ncomps` the number of vector components (>= 1).
 * Returns null on invalid input.
 */
struct SgbContext *sgb_context_new(const char *ring, const char *vars, uintptr_t ncomps);

/**
 * Releases a context created by `sgb_context_new`.
 */
void sgb_context_free(struct SgbContext *ctx);

/**
 * Releases a string returned by this library.
 */
void sgb_string_free(char *s);

/**
 * The reduced strong Groebner basis of the module generated by the
 * newline separated vectors in `gens`, one basis element per line in
 * strictly decreasing order. Returns null on error.
 */
char *sgb_reduced_basis(const struct SgbContext *ctx, const char *gens);

/**
 * Whether `f` lies in the module generated by the newline separated
 * vectors in `gens`: 1 yes, 0 no, negative error code on failure.
 */
int sgb_member(const struct SgbContext *ctx, const char *f, const char *gens);

/**
 * The S-polynomial vector of `f` and `g`. Returns null on error.
 */
char *sgb_spoly(const struct SgbContext *ctx, const char *f, const char *g);

/**
 * Groebner normal form of the matrix in the JSON document `input`.
 * The result is a JSON document with a "result" object; null on error.
 */
char *sgb_gnf_json(const char *input);

/**
 * Solves A x = b for the matrix and rhs in the JSON document `input`.
 */
char *sgb_solve_json(const char *input);

/**
 * A Groebner normal form of the kernel of the matrix in `input`.
 */
char *sgb_kernel_json(const char *input);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SGB_H */
