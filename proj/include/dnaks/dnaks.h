/* dnaks — test-tube model simulator and DNA k-supplier solver.
 *
 * C API for the shared library. All functions return a dnaks_status;
 * output strings are heap-allocated and must be released with
 * dnaks_string_free(). On failure dnaks_last_error() describes the
 * problem for the calling thread.
 */
#ifndef DNAKS_H
#define DNAKS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dnaks_status {
  DNAKS_OK = 0,
  DNAKS_ERR_BAD_ARGUMENT = 1,
  DNAKS_ERR_IO = 2,
  DNAKS_ERR_PARSE = 3,
  DNAKS_ERR_VALIDATION = 4,
  DNAKS_ERR_STRAND_EXPLOSION = 5,
  DNAKS_ERR_NO_SOLUTION = 6,
  DNAKS_ERR_SIZE_GUARD = 7,
  DNAKS_ERR_NONTERMINATING = 8,
  DNAKS_ERR_INTERNAL = 9
} dnaks_status;

enum {
  DNAKS_PIPELINE_PAPER = 0,
  DNAKS_PIPELINE_CORRECTED = 1,
  DNAKS_PIPELINE_BOTH = 2
};

enum {
  DNAKS_PHASE2_CORRECTED = 0,
  DNAKS_PHASE2_PAPER_LITERAL = 1
};

enum {
  DNAKS_EXTRACT_SELECTION = 0,
  DNAKS_EXTRACT_XSEARCH = 1,
  DNAKS_EXTRACT_BOTH = 2
};

enum {
  DNAKS_OBJECTIVE_PAPER_MAXMAX = 0,
  DNAKS_OBJECTIVE_KSUPPLIER_MAXMIN = 1
};

typedef struct dnaks_instance dnaks_instance;

typedef struct dnaks_solve_options {
  int pipeline;           /* DNAKS_PIPELINE_* */
  int phase2_mode;        /* DNAKS_PHASE2_*; applies to the paper pipeline */
  int extract;            /* DNAKS_EXTRACT_* */
  const char* trace_path; /* JSONL trace file, NULL for none */
  uint64_t max_strands;   /* annealing product cap, 0 for default */
} dnaks_solve_options;

/* Fills the defaults: both pipelines, corrected phase 2, both extraction
 * variants, no trace, default cap. */
void dnaks_solve_options_init(dnaks_solve_options* options);

/* Instance lifecycle. The JSON schema is
 * {"n": int, "edges": [[u,v,w],...], "clients": [...], "facilities": [...],
 *  "k": int} with 1-indexed vertices and integer weights >= 1. */
dnaks_status dnaks_instance_from_json(const char* json, dnaks_instance** out);
dnaks_status dnaks_instance_from_file(const char* path, dnaks_instance** out);
dnaks_status dnaks_instance_to_json(const dnaks_instance* instance, char** json_out);
void dnaks_instance_free(dnaks_instance* instance);

/* Runs the selected pipeline(s). For a single pipeline the report object
 * is returned directly; for DNAKS_PIPELINE_BOTH the result is
 * {"paper": <report>, "corrected": <report>}. */
dnaks_status dnaks_solve(const dnaks_instance* instance,
                         const dnaks_solve_options* options, char** report_json_out);

/* Brute-force reference result for either objective. */
dnaks_status dnaks_oracle_solve(const dnaks_instance* instance, int objective_kind,
                                char** result_json_out);

/* Seeded random connected instance as JSON text. */
dnaks_status dnaks_generate_instance(uint32_t n, double density, uint32_t max_weight,
                                     uint64_t seed, char** instance_json_out);

/* gen + solve + verify for `count` instances; summary as JSON. */
dnaks_status dnaks_campaign(uint32_t count, uint32_t n_min, uint32_t n_max,
                            uint64_t seed, char** summary_json_out);

void dnaks_string_free(char* s);

/* Message for the most recent failure on this thread; never NULL. */
const char* dnaks_last_error(void);

const char* dnaks_version(void);

#ifdef __cplusplus
}
#endif

#endif /* DNAKS_H */
