/* logjet: exact log Hasse-Schmidt (jet) rings, jet multiplicity and the
 * polynomial ABC suite, behind a C interface.
 *
 * All functions return a logjet_status. Anything other than LOGJET_OK leaves
 * a human-readable message in logjet_last_error() (thread local). Strings
 * returned through char** out parameters are heap-allocated and must be
 * released with logjet_string_free().
 */
#ifndef LOGJET_H
#define LOGJET_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LOGJET_OK = 0,
  LOGJET_ASSERTION_FAILED = 1, /* a theorem-level assertion failed */
  LOGJET_REJECTED = 2,         /* input rejected: parse or precondition */
  LOGJET_ERROR = 3             /* internal failure */
} logjet_status;

const char* logjet_version(void);
const char* logjet_last_error(void);
void logjet_string_free(char* s);

/* Resolver for `base` references inside presentation files. Must return a
 * malloc()-allocated copy of the file contents, or NULL if unreadable. May
 * be NULL when the presentation has no base line. */
typedef char* (*logjet_read_file_fn)(const char* path, void* userdata);

/* ---- presentation files ------------------------------------------------ */

typedef struct logjet_presentation logjet_presentation;

logjet_status logjet_presentation_parse(const char* text,
                                        logjet_presentation** out);
/* canonical normalized re-print of the file */
logjet_status logjet_presentation_print(const logjet_presentation* p,
                                        char** out);
void logjet_presentation_free(logjet_presentation* p);

/* ---- Hasse-Schmidt presentations --------------------------------------- */

typedef struct logjet_hs logjet_hs;

logjet_status logjet_hs_build(const logjet_presentation* p, uint32_t order,
                              uint32_t order_cap, logjet_read_file_fn reader,
                              void* userdata, logjet_hs** out);
logjet_status logjet_hs_print(const logjet_hs* hs, int show_omega, char** out);
/* normal form of a polynomial in the presentation's symbols */
logjet_status logjet_hs_normal_form(const logjet_hs* hs, const char* poly,
                                    char** out);
logjet_status logjet_hs_contains(const logjet_hs* hs, const char* poly,
                                 int* out);
void logjet_hs_free(logjet_hs* hs);

/* ---- one-shot commands (the CLI surface) -------------------------------
 * Each renders a report into *out (text or line-oriented key=value when
 * machine_format is nonzero) and returns the exit-code contract:
 * LOGJET_OK, LOGJET_ASSERTION_FAILED, or LOGJET_REJECTED. */

logjet_status logjet_cmd_hs(const char* file_text, uint32_t order,
                            int show_omega, uint32_t cap, int machine_format,
                            logjet_read_file_fn reader, void* userdata,
                            char** out);

/* file_text may be NULL when vars_csv names a free ambient ring */
logjet_status logjet_cmd_mult(const char* file_text, const char* vars_csv,
                              const char* equation, const char* point_csv,
                              uint32_t cap, int machine_format,
                              logjet_read_file_fn reader, void* userdata,
                              char** out);

logjet_status logjet_cmd_mason_conductor(const char* poly, const char* var,
                                         int machine_format, char** out);
logjet_status logjet_cmd_mason_theorem(const char* f, const char* g,
                                       const char* h, const char* var,
                                       int machine_format, char** out);
logjet_status logjet_cmd_mason_corollary(const char* f, const char* g,
                                         const char* var, int machine_format,
                                         char** out);
/* images: one polynomial in the line variable per ambient variable,
 * separated by ';' */
logjet_status logjet_cmd_mason_pullback(const char* f, const char* g,
                                        const char* vars_csv,
                                        const char* images,
                                        const char* locus, const char* var,
                                        int machine_format, char** out);

logjet_status logjet_cmd_glue(const char* poly, const char* vars_csv,
                              int corrupt, int machine_format, char** out);

logjet_status logjet_cmd_suite(uint64_t seed, int machine_format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LOGJET_H */
