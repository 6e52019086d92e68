#ifndef NNCURV_H
#define NNCURV_H

/* C interface to the chain catalog, the criterion decision pipeline, and
 * certificate verification. All returned strings are heap-allocated and must
 * be released with nncurv_string_free. Functions returning int use the shared
 * status contract: 0 conclusive, 1 usage or I/O error, 2 verification or
 * consistency failure, 3 inconclusive, 4 internal construction error. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nncurv_chain nncurv_chain;

const char* nncurv_version(void);

void nncurv_string_free(char* s);

/* JSON array of {id, expected, summary} for every catalog entry. */
char* nncurv_catalog_list_json(void);

/* NULL on unknown id or a failed recipe; *err receives the reason. */
nncurv_chain* nncurv_chain_build(const char* id, char** err);

void nncurv_chain_free(nncurv_chain* chain);

/* Dimensions, expectation tag, and summary of a built chain. */
char* nncurv_chain_info_json(const nncurv_chain* chain);

/* options_json keys (all optional): restarts, iterations, threads, seed,
 * tol_accept, theta_min. Writes the verdict to *verdict_json and, when a
 * witness pair exists, the certificate to *certificate_json (NULL otherwise).
 * Returns 0 for a conclusive verdict, 3 when no counterexample was found
 * within budget, 4 on an internal construction failure. */
int nncurv_analyze(const nncurv_chain* chain, const char* options_json,
                   char** verdict_json, char** certificate_json, char** err);

/* Rebuilds the certificate's chain, checks the basis digest, and re-verifies
 * the pair. *report_json receives {accepted, reason, residual,
 * m_bracket_norm, digest_ok}. Returns 0 accepted, 2 rejected or digest
 * mismatch, 1 on malformed input. */
int nncurv_verify_certificate_json(const char* certificate_json,
                                   char** report_json, char** err);

/* Runs the whole catalog. options_json keys: restarts, iterations, threads,
 * seed, format ("md" or "json"). *report receives the rendered table.
 * Returns 0 when every computed verdict is consistent with its expectation,
 * 2 otherwise. */
int nncurv_report_catalog(const char* options_json, char** report, char** err);

#ifdef __cplusplus
}
#endif

#endif /* NNCURV_H */
