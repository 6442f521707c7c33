#ifndef AFOLD_AFOLD_H
#define AFOLD_AFOLD_H

/* C interface to the verification engine. A run takes one JSON request and
 * produces an opaque report that renders to json, csv, or text.
 *
 * Request object:
 *   verb             "verify" (default) | "decompose" | "betti" | "rees-gens" | "alpha"
 *   suite            verify only: "decomposition" | "resolution" | "powers" |
 *                    "rees" | "star" | "all"
 *   catalog          built-in arrangement id, e.g. "generic4"
 *   arrangement      inline arrangement object (alternative to catalog)
 *   input_id         label used in report records (defaults to the catalog id)
 *   a,e,c,m,t,N,s    grid ranges: "all" | "2" | "1..4" (or a plain integer)
 *   budget_pairs     S-pair cap per basis computation
 *   budget_ms        wall-clock cap per basis computation, 0 = unlimited
 *   include_generic5 run the heavy five-form blow-up theorems
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum afold_status {
  AFOLD_OK = 0,
  AFOLD_USAGE_ERROR = 1,   /* unknown verb/suite/catalog or bad request shape */
  AFOLD_PARSE_ERROR = 2,   /* request or arrangement JSON failed to parse */
  AFOLD_INTERNAL_ERROR = 3 /* unexpected failure; see afold_last_error */
} afold_status;

typedef struct afold_report afold_report;

/* On AFOLD_OK, *out owns the report; release it with afold_report_free. */
afold_status afold_run(const char* request_json, afold_report** out);

/* Renders "json", "csv", or "text". The pointer stays valid until the report
 * is freed. NULL for an unknown format. */
const char* afold_report_render(afold_report* report, const char* format);

/* 0 = all checks true, 1 = some check false, 2 = some check inconclusive. */
int afold_report_exit_code(const afold_report* report);

void afold_report_free(afold_report* report);

/* Message from the most recent failing call on this thread. */
const char* afold_last_error(void);

unsigned afold_abi_version(void);

#ifdef __cplusplus
}
#endif

#endif
