/* C interface to the fpsloop kernel.
 *
 * Objects are opaque handles released with their *_free function. Every
 * function returns an fpsl_status; on failure fpsl_last_error() describes
 * the problem for the calling thread. Strings returned through char** are
 * heap allocated and released with fpsl_string_free. Structured results
 * are JSON documents.
 */
#ifndef FPSLOOP_H
#define FPSLOOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(FPSLOOP_BUILDING_LIBRARY)
#define FPSL_API __attribute__((visibility("default")))
#else
#define FPSL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fpsl_status {
  FPSL_OK = 0,
  FPSL_ERR_ASSOCIATIVITY_VIOLATION,
  FPSL_ERR_GRADING_VIOLATION,
  FPSL_ERR_EMPTY_GENERATORS,
  FPSL_ERR_ALGEBRA_MISMATCH,
  FPSL_ERR_TRUNCATION_MISMATCH,
  FPSL_ERR_BAD_PARAMS,
  FPSL_ERR_SUPPORT_NEEDS_FREE_ALGEBRA,
  FPSL_ERR_K_TOO_LARGE,
  FPSL_ERR_EMPTY_ARGS,
  FPSL_ERR_EMPTY_I,
  FPSL_ERR_BAD_ARITY,
  FPSL_ERR_BAD_INDEX,
  FPSL_ERR_TRUNCATION_TOO_SMALL,
  FPSL_ERR_PARSE,
  FPSL_ERR_UNKNOWN_SYMBOL,
  FPSL_ERR_INCONSISTENT,
  FPSL_ERR_INVALID_ARGUMENT,
  FPSL_ERR_NULL_POINTER,
  FPSL_ERR_INTERNAL
} fpsl_status;

typedef struct fpsl_algebra fpsl_algebra;
typedef struct fpsl_series fpsl_series;

typedef enum fpsl_binop {
  FPSL_COMPOSE = 0,        /* f o g */
  FPSL_LEFT_DIVIDE,        /* f \ h */
  FPSL_RIGHT_DIVIDE,       /* h / g */
  FPSL_STAR,
  FPSL_STAR_LEFT_DIVIDE,
  FPSL_STAR_RIGHT_DIVIDE,
  FPSL_BULLET,
  FPSL_LINEARIZED,         /* linearized composition */
  FPSL_LOOP_COMMUTATOR     /* (b o a) \ (a o b) */
} fpsl_binop;

FPSL_API const char* fpsl_status_name(fpsl_status status);
/* Message of the last failure on this thread; "" after success. */
FPSL_API const char* fpsl_last_error(void);
/* 1-based position of the last parse error, or 0 when unknown. */
FPSL_API void fpsl_last_error_position(size_t* line, size_t* column);
FPSL_API void fpsl_string_free(char* s);

/* Algebras: builtin spec ("ut:3", "laurent:-4:4", ...), file path or inline JSON. */
FPSL_API fpsl_status fpsl_algebra_load(const char* source, fpsl_algebra** out);
FPSL_API void fpsl_algebra_free(fpsl_algebra* algebra);
FPSL_API fpsl_status fpsl_algebra_to_json(const fpsl_algebra* algebra, char** out);
FPSL_API fpsl_status fpsl_algebra_is_graded(const fpsl_algebra* algebra, int* graded);
FPSL_API fpsl_status fpsl_algebra_predicates(const fpsl_algebra* algebra, int* s_brackets_zero,
                                             int* brackets_s3_zero);

/* Series. graded < 0 picks graded mode exactly when the algebra is graded. */
FPSL_API fpsl_status fpsl_series_parse(const fpsl_algebra* algebra, const char* text,
                                       int truncation, int graded, fpsl_series** out);
/* algebra may be NULL; the document's "algebra" entry is used then. */
FPSL_API fpsl_status fpsl_series_from_json(const fpsl_algebra* algebra, const char* json,
                                           fpsl_series** out);
FPSL_API void fpsl_series_free(fpsl_series* series);
FPSL_API fpsl_status fpsl_series_to_json(const fpsl_series* series, char** out);
FPSL_API fpsl_status fpsl_series_to_text(const fpsl_series* series, char** out);
FPSL_API fpsl_status fpsl_series_equal(const fpsl_series* a, const fpsl_series* b, int* equal);
/* Depth, or -1 for the unit. */
FPSL_API fpsl_status fpsl_series_depth(const fpsl_series* series, int* depth);

FPSL_API fpsl_status fpsl_series_binary(fpsl_binop op, const fpsl_series* a,
                                        const fpsl_series* b, fpsl_series** out);
/* (a o (b o c)) \ ((a o b) o c) */
FPSL_API fpsl_status fpsl_series_associator(const fpsl_series* a, const fpsl_series* b,
                                            const fpsl_series* c, fpsl_series** out);
/* (a o b) o c - a o (b o c), as a plain difference of coefficients. */
FPSL_API fpsl_status fpsl_series_associator_defect(const fpsl_series* a, const fpsl_series* b,
                                                   const fpsl_series* c, char** out_json);

/* Iterated deviation: base "comm" or "assoc", indices as in comm_1 or assoc_1,4. */
FPSL_API fpsl_status fpsl_deviation(const char* base, const int* indices, size_t n_indices,
                                    const fpsl_series* const* args, size_t n_args,
                                    fpsl_series** out);

/* Brackets. The input document is
 *   {"xs": [{"degree": d, "terms": [["p/q", ["a"]], ...]}, ...], "y": {...}, "z": {...}}
 * method is "closed" or "recursive". Output: a graded element document.
 */
FPSL_API fpsl_status fpsl_bracket_closed(const fpsl_algebra* algebra, const char* elements_json,
                                         const char* method, char** out_json);
FPSL_API fpsl_status fpsl_bracket_filtration(const int* degrees, size_t n_degrees, int deg_y,
                                             int deg_z, int truncation, char** out_json);

/* target_ba != 0 asks for beta*alpha, otherwise alpha*beta. */
FPSL_API fpsl_status fpsl_klopsch(int n, int m, int target_ba, char** out_json);

/* Identity reports: {"status": "PASS"|"FAIL", "checked", "witness"?, "value"?}. */
FPSL_API fpsl_status fpsl_identity_st(const fpsl_algebra* algebra, int n, int tmax,
                                      char** out_json, int* pass);
/* kind "wronskian" (uses algebra and tmax), "graded" (Witt-type bracket on a
 * graded algebra), or "table" (table_json = {"labels": [...],
 * "table": {"i,j": [[k, "p/q"], ...]}}, algebra unused). */
FPSL_API fpsl_status fpsl_identity_jacobi(const fpsl_algebra* algebra, const char* kind, int tmax,
                                          const char* table_json, char** out_json, int* pass);
FPSL_API fpsl_status fpsl_identity_sabinin_axioms(const fpsl_algebra* algebra, int max_arity,
                                                  int window, char** out_json, int* pass);

FPSL_API fpsl_status fpsl_check_group(const fpsl_algebra* algebra, int truncation, int samples,
                                      uint64_t seed, char** out_json, int* is_group);

/* Acceptance suite. only_csv selects criteria ("9,11"); NULL or "" runs all. */
FPSL_API fpsl_status fpsl_selftest(uint64_t seed, int flip_closed_sign, const char* only_csv,
                                   char** out_json, char** out_table, int* all_pass);

FPSL_API uint64_t fpsl_default_seed(void);

#ifdef __cplusplus
}
#endif

#endif /* FPSLOOP_H */
