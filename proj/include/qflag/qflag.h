#ifndef QFLAG_QFLAG_H
#define QFLAG_QFLAG_H

/* C interface to the qflag library. Every call returns a status code; on
 * failure qflag_last_error() describes the problem. Results are returned as
 * JSON text allocated by the library and released with qflag_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QFLAG_API __declspec(dllexport)
#else
#define QFLAG_API __attribute__((visibility("default")))
#endif

typedef enum qflag_status {
  QFLAG_OK = 0,
  QFLAG_ERR_DOMAIN = 1,   /* mathematically invalid input (non-dominant weight, q outside (0,1), ...) */
  QFLAG_ERR_INVALID = 2,  /* malformed input (bad type name, unparsable rational, null pointer) */
  QFLAG_ERR_INTERNAL = 3
} qflag_status;

/* Flags for q arguments. By default q is an exact rational "p/q". */
enum {
  QFLAG_Q_FLOAT = 1,          /* parse q as a floating point number */
  QFLAG_Q_ALLOW_OUTSIDE = 2   /* permit evaluation at q outside (0,1) */
};

typedef struct qflag_rootsys qflag_rootsys;

QFLAG_API const char* qflag_last_error(void);
QFLAG_API void qflag_string_free(char* s);
QFLAG_API const char* qflag_version(void);

/* type is "A".."G" together with rank, or a full name such as "B2" with rank 0. */
QFLAG_API qflag_status qflag_rootsys_new(const char* type, int rank, qflag_rootsys** out);
QFLAG_API void qflag_rootsys_free(qflag_rootsys* rs);
QFLAG_API int qflag_rootsys_rank(const qflag_rootsys* rs);
QFLAG_API qflag_status qflag_rootsys_json(const qflag_rootsys* rs, char** out);

QFLAG_API qflag_status qflag_weights(const qflag_rootsys* rs, const int64_t* lambda, size_t len, char** out);

/* route: "product", "weights" or "character". q may be NULL for the
 * polynomial only; otherwise the value at q is added. */
QFLAG_API qflag_status qflag_qdim(const qflag_rootsys* rs, const int64_t* lambda, size_t len, const char* route,
                                  const char* q, int q_flags, char** out);
QFLAG_API qflag_status qflag_fmatrix(const qflag_rootsys* rs, const int64_t* lambda, size_t len, char** out);

QFLAG_API qflag_status qflag_haar_p0(const qflag_rootsys* rs, const char* q, int q_flags, char** out);
QFLAG_API qflag_status qflag_haar_alambda(const qflag_rootsys* rs, const int64_t* lambda, size_t len, const char* q,
                                          int q_flags, char** out);
/* m has one entry per positive root, in reduced-word order. */
QFLAG_API qflag_status qflag_haar_diag(const qflag_rootsys* rs, const int64_t* m, size_t len, const char* q,
                                       int q_flags, char** out);

/* trunc <= 0 selects the default truncation (QFLAG_TRUNC_N or 32). */
QFLAG_API qflag_status qflag_su2_haar(const char* word, const char* q, int q_flags, int trunc, char** out);
QFLAG_API qflag_status qflag_su2_ortho(const char* q, int q_flags, int trunc, char** out);
QFLAG_API qflag_status qflag_su2_commutation(const char* q, int q_flags, int trunc, int64_t lambda_coord, char** out);

/* word may be NULL (len 0) for the longest element. cutoff <= 0 means q^12. */
QFLAG_API qflag_status qflag_soibelman_spectrum(const qflag_rootsys* rs, const int64_t* lambda, size_t len,
                                                const int* word, size_t word_len, const char* q, int q_flags,
                                                int trunc, double cutoff, char** out);
/* n < 0 stands for n = infinity, i.e. the distance to the projection p_0. */
QFLAG_API qflag_status qflag_soibelman_gap(const qflag_rootsys* rs, const int64_t* lambda, size_t len,
                                           const int* word, size_t word_len, const char* q, int q_flags, int trunc,
                                           int64_t m, int64_t n, char** out);

/* spec_json: {"q": "1/2", "blocks": [{"spin": "1/2", "c": "1"}, ...]} */
QFLAG_API qflag_status qflag_classify(const char* spec_json, char** out);

/* failed receives the number of failing checks (may be NULL). */
QFLAG_API qflag_status qflag_selftest(char** out, int* failed);

#ifdef __cplusplus
}
#endif

#endif
