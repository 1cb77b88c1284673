/* pptlab C API.
 *
 * Every call returns a pptlab_status.  On failure a message is available from
 * pptlab_last_error() until the next call on the same thread.  Strings handed
 * out through char** parameters are owned by the caller and released with
 * pptlab_string_free().
 */
#ifndef PPTLAB_H
#define PPTLAB_H

#include <stddef.h>

#if defined(PPTLAB_BUILDING_LIBRARY)
#define PPTLAB_API __attribute__((visibility("default")))
#else
#define PPTLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes where they overlap. */
typedef enum {
  PPTLAB_OK = 0,
  PPTLAB_E_INVALID_INPUT = 2,
  PPTLAB_E_RESOURCE_LIMIT = 3,
  PPTLAB_E_INTERNAL = 4,
  PPTLAB_E_NOT_AVAILABLE = 5,
  PPTLAB_E_NULL_ARGUMENT = 6
} pptlab_status;

typedef struct pptlab_context pptlab_context;
typedef struct pptlab_poly pptlab_poly;
typedef struct pptlab_input pptlab_input;
typedef struct pptlab_sequence pptlab_sequence;

PPTLAB_API const char* pptlab_version(void);
PPTLAB_API const char* pptlab_last_error(void);
PPTLAB_API void pptlab_string_free(char* s);

/* vars: "x,y,z" or "x1..x5" */
PPTLAB_API pptlab_status pptlab_context_new(unsigned p, const char* vars,
                                            pptlab_context** out);
PPTLAB_API void pptlab_context_free(pptlab_context* ctx);

PPTLAB_API pptlab_status pptlab_poly_parse(const pptlab_context* ctx,
                                           const char* src, pptlab_poly** out);
PPTLAB_API pptlab_status pptlab_poly_render(const pptlab_poly* f, char** out);
PPTLAB_API void pptlab_poly_free(pptlab_poly* f);

/* Checks that f is divisible by neither p nor a unit. */
PPTLAB_API pptlab_status pptlab_input_new(const pptlab_poly* f,
                                          pptlab_input** out);
PPTLAB_API void pptlab_input_free(pptlab_input* h);

PPTLAB_API pptlab_status pptlab_sequence_compute(const pptlab_input* h,
                                                 unsigned depth,
                                                 pptlab_sequence** out);
/* Copies s_0..s_depth into buf (up to cap entries); *len gets depth + 1. */
PPTLAB_API pptlab_status pptlab_sequence_values(const pptlab_sequence* seq,
                                                unsigned* buf, size_t cap,
                                                size_t* len);
/* "num/den" strings.  The exact value is PPTLAB_E_NOT_AVAILABLE when neither
 * a certificate nor a repeating window determines it. */
PPTLAB_API pptlab_status pptlab_sequence_ppt_partial(const pptlab_sequence* seq,
                                                     char** out);
PPTLAB_API pptlab_status pptlab_sequence_ppt_exact(const pptlab_sequence* seq,
                                                   char** out);
/* "PerfectoidPure", "NotPerfectoidPure" or "Inconclusive". */
PPTLAB_API pptlab_status pptlab_sequence_verdict(const pptlab_sequence* seq,
                                                 int strict, char** out);
PPTLAB_API void pptlab_sequence_free(pptlab_sequence* seq);

/* Runs one CLI request given as JSON.  *out_json receives the result record
 * (or an error object), *out_text its plain-text rendering, *exit_code the
 * CLI exit code.  Either string pointer may be NULL.  Bad requests and
 * failed computations are reported through the record and the exit code;
 * the returned status only covers NULL arguments and allocation failure. */
PPTLAB_API pptlab_status pptlab_run(const char* request_json, char** out_json,
                                    char** out_text, int* exit_code);

#ifdef __cplusplus
}
#endif

#endif
