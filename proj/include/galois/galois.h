/* C interface to the galois checker. All strings are UTF-8 and NUL-terminated.
 * Strings returned by report accessors live as long as the report. */
#ifndef GALOIS_GALOIS_H
#define GALOIS_GALOIS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GALOIS_API __declspec(dllexport)
#else
#define GALOIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum galois_status {
  GALOIS_OK = 0,
  GALOIS_E_USAGE = 1,    /* bad argument value, unknown name */
  GALOIS_E_BUDGET = 2,   /* reserved; budget overruns surface through the report exit code */
  GALOIS_E_INTERNAL = 3,
  GALOIS_E_NULL = 4      /* a required pointer was NULL */
} galois_status;

typedef enum galois_format { GALOIS_FORMAT_TEXT = 0, GALOIS_FORMAT_JSON = 1 } galois_format;

typedef struct galois_config galois_config;
typedef struct galois_report galois_report;

GALOIS_API const char* galois_version(void);
/* Message for the last failing call on this thread ("" if none). */
GALOIS_API const char* galois_last_error(void);

/* Defaults: k=2, L=5, text format, budget 1e8, one worker. */
GALOIS_API galois_status galois_config_new(galois_config** out);
GALOIS_API void galois_config_free(galois_config* cfg);

/* command: check-order, check-spec, check-gc, check-laws, find-counterexample, oracle */
GALOIS_API galois_status galois_config_set_command(galois_config* cfg, const char* command);
GALOIS_API galois_status galois_config_set_target(galois_config* cfg, const char* target);
GALOIS_API galois_status galois_config_set_subject(galois_config* cfg, const char* subject);
GALOIS_API galois_status galois_config_set_universe(galois_config* cfg, unsigned alphabet_size, unsigned max_len);
/* 0b..., 0x... or decimal bitmask; bit i is element i. */
GALOIS_API galois_status galois_config_set_pred(galois_config* cfg, const char* bitmask);
GALOIS_API galois_status galois_config_set_n(galois_config* cfg, uint64_t n);
GALOIS_API galois_status galois_config_set_input(galois_config* cfg, const char* csv);
GALOIS_API galois_status galois_config_set_format(galois_config* cfg, galois_format format);
GALOIS_API galois_status galois_config_set_budget(galois_config* cfg, uint64_t budget);
GALOIS_API galois_status galois_config_set_workers(galois_config* cfg, unsigned workers);
GALOIS_API galois_status galois_config_set_timing(galois_config* cfg, int enabled);

/* Runs the configured command. A check that fails or is over budget still
 * returns GALOIS_OK; inspect galois_report_exit_code. */
GALOIS_API galois_status galois_run(const galois_config* cfg, galois_report** out);
GALOIS_API void galois_report_free(galois_report* report);

/* 0 pass, 1 fail / not-applicable, 2 usage or budget error, 3 internal error. */
GALOIS_API int galois_report_exit_code(const galois_report* report);
/* The rendered report in the configured format; "" when the run errored. */
GALOIS_API const char* galois_report_output(const galois_report* report);
/* Error message for exit codes 2 and 3; "" otherwise. */
GALOIS_API const char* galois_report_error(const galois_report* report);

/* Registered targets, one group per line. Static storage. */
GALOIS_API const char* galois_list_targets(void);

#ifdef __cplusplus
}
#endif

#endif /* GALOIS_GALOIS_H */
