#ifndef GTRS_H
#define GTRS_H

/* C interface to the ground TRS property deciders.
 *
 * Every call returns a gtrs_status. On failure the message of the last error
 * on the calling thread is available from gtrs_last_error(). Strings returned
 * through char** are owned by the caller and released with gtrs_string_free.
 * One handle must not be used from two threads at once; distinct handles are
 * independent. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define GTRS_API __declspec(dllexport)
#else
#define GTRS_API __attribute__((visibility("default")))
#endif

typedef struct gtrs_analysis gtrs_analysis;

typedef enum gtrs_status {
  GTRS_OK = 0,
  GTRS_E_ARGUMENT = 1, /* null pointer, unknown property, ... */
  GTRS_E_IO = 2,       /* unreadable file */
  GTRS_E_PARSE = 3,    /* syntax error, variable, arity conflict */
  GTRS_E_INTERNAL = 4, /* verdicts contradict each other */
  GTRS_E_STATE = 5     /* e.g. witness requested before deciding */
} gtrs_status;

typedef enum gtrs_property { GTRS_CR = 0, GTRS_NFP = 1, GTRS_UNC = 2, GTRS_UNR = 3 } gtrs_property;

enum {
  GTRS_REPORT_WITNESS = 1u << 0,
  GTRS_REPORT_TIMINGS = 1u << 1,
  GTRS_REPORT_DETERMINISTIC = 1u << 2
};

/* Bit (1u << p) selects property p; GTRS_ALL selects all four. */
#define GTRS_ALL 0xFu

GTRS_API const char* gtrs_last_error(void);
GTRS_API const char* gtrs_status_name(gtrs_status s);
GTRS_API void gtrs_string_free(char* s);

GTRS_API gtrs_status gtrs_parse_property(const char* name, gtrs_property* out);
GTRS_API const char* gtrs_property_name(gtrs_property p);

GTRS_API gtrs_status gtrs_analysis_from_text(const char* text, size_t length, gtrs_analysis** out);
GTRS_API gtrs_status gtrs_analysis_from_file(const char* path, gtrs_analysis** out);
GTRS_API void gtrs_analysis_free(gtrs_analysis* a);

/* Input statistics: sum of rule side sizes, rule count, distinct subterms. */
GTRS_API gtrs_status gtrs_stats(const gtrs_analysis* a, unsigned long long* total_size,
                                size_t* rules, size_t* subterms);

GTRS_API gtrs_status gtrs_decide(gtrs_analysis* a, gtrs_property p, int* holds);
/* holds[p] for all four; GTRS_E_INTERNAL if CR => NFP => UNC => UNR fails. */
GTRS_API gtrs_status gtrs_decide_all(gtrs_analysis* a, int holds[4]);

/* Witness of a negative verdict from an earlier decide call. Terms are
 * rendered uncurried where possible. */
GTRS_API gtrs_status gtrs_witness(gtrs_analysis* a, gtrs_property p, int* condition, char** s,
                                  char** t);

/* Decides the selected properties and renders a report. `label` names the
 * input in the output. */
GTRS_API gtrs_status gtrs_report_json(gtrs_analysis* a, const char* label, unsigned properties,
                                      unsigned flags, char** out);
GTRS_API gtrs_status gtrs_report_text(gtrs_analysis* a, const char* label, unsigned properties,
                                      unsigned flags, char** out);

/* Re-checks a claimed counterexample (s, t) to property p. Terms use the
 * input syntax or explicit application with ∘. *valid is 1 or 0; on 0 a
 * reason is returned when `reason` is non-null. */
GTRS_API gtrs_status gtrs_check_witness(gtrs_analysis* a, gtrs_property p, const char* s,
                                        const char* t, int* valid, char** reason);

#ifdef __cplusplus
}
#endif

#endif
