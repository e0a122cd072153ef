#ifndef ODDSING_H
#define ODDSING_H

#include <stdint.h>

#if defined(_WIN32)
#define ODDSING_API __declspec(dllexport)
#else
#define ODDSING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as process exit codes. */
typedef enum oddsing_status {
  ODDSING_OK = 0,
  ODDSING_PRECONDITION = 1, /* mathematical precondition violated */
  ODDSING_USAGE = 2,        /* malformed arguments */
  ODDSING_CONSISTENCY = 3   /* internal consistency failure or failed check */
} oddsing_status;

typedef enum oddsing_format { ODDSING_PLAIN = 0, ODDSING_LATEX = 1, ODDSING_JSON = 2 } oddsing_format;

typedef enum oddsing_family { ODDSING_EVEN = 0, ODDSING_ODD = 1 } oddsing_family;

/* gl(m|n) or an osp algebra. */
typedef struct oddsing_algebra oddsing_algebra;
/* Rendered output of one command. */
typedef struct oddsing_doc oddsing_doc;

ODDSING_API const char* oddsing_version(void);
/* Message of the last failure on the calling thread, "" if none. */
ODDSING_API const char* oddsing_last_error(void);

ODDSING_API oddsing_status oddsing_gl_create(int m, int n, oddsing_algebra** out);
/* osp(2m|2n) (even) or osp(2m+1|2n) (odd): m counts the ε's, n the δ's. */
ODDSING_API oddsing_status oddsing_osp_create(oddsing_family family, int m, int n, oddsing_algebra** out);
ODDSING_API void oddsing_algebra_destroy(oddsing_algebra* alg);
/* e.g. "gl(2|1)", valid while the handle lives. */
ODDSING_API const char* oddsing_algebra_name(const oddsing_algebra* alg);
ODDSING_API int oddsing_algebra_dimension(const oddsing_algebra* alg);

/* beta: "d<s>-e<t>" or "d<s>+e<t>"; lambda: comma-separated a_p..a_1,b_1..b_q.
   On a status other than ODDSING_OK *out may still hold a document (verify,
   kac_check and sweep report failed checks that way); destroy it if set. */
ODDSING_API oddsing_status oddsing_singular(const oddsing_algebra* alg, const char* beta, const char* lambda,
                                            oddsing_format format, oddsing_doc** out);
ODDSING_API oddsing_status oddsing_shapovalov(const oddsing_algebra* alg, const char* beta, oddsing_format format,
                                              oddsing_doc** out);
ODDSING_API oddsing_status oddsing_verify(const oddsing_algebra* alg, const char* beta, const char* lambda, int kac,
                                          oddsing_format format, oddsing_doc** out);
ODDSING_API oddsing_status oddsing_kac_check(const oddsing_algebra* alg, const char* beta, const char* lambda,
                                             oddsing_format format, oddsing_doc** out);
/* kind: "gl" or "osp"; threads 0 uses every core. */
ODDSING_API oddsing_status oddsing_sweep(const char* kind, oddsing_family family, int max_m, int max_n, int samples,
                                         uint64_t seed, unsigned threads, oddsing_format format, oddsing_doc** out);

ODDSING_API const char* oddsing_doc_text(const oddsing_doc* doc);
ODDSING_API void oddsing_doc_destroy(oddsing_doc* doc);

#ifdef __cplusplus
}
#endif

#endif
