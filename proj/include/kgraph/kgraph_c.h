/* C API for the kgraph toolkit: opaque skeleton handles, status codes,
 * and JSON-string reports. Strings returned through char** or char*
 * are heap-allocated; release them with kg_string_free. */

#ifndef KGRAPH_C_H
#define KGRAPH_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct kg_skeleton kg_skeleton;

/* Values double as process exit codes for the CLI. */
typedef enum kg_status {
    KG_OK = 0,
    KG_INVALID_SKELETON = 1,
    KG_CHECK_FAILED = 2,
    KG_BAD_ARGUMENT = 3
} kg_status;

/* Parses, structurally validates, and associativity-checks a skeleton
 * document. On failure *out is NULL and *error_json (when non-NULL)
 * carries {"error": ...}. */
kg_status kg_skeleton_from_json(const char* json_text, kg_skeleton** out, char** error_json);

/* Built-in fixture families: ex43 | loops | free2 | exchange3 | random.
 * m is the family parameter (truncation, loops per color, or size hint);
 * pass m < 0 for the family default. */
kg_status kg_skeleton_fixture(const char* name, int m, uint64_t seed, kg_skeleton** out,
                              char** error_json);

void kg_skeleton_free(kg_skeleton* sk);

/* The skeleton document in the external JSON schema. */
char* kg_skeleton_to_json(const kg_skeleton* sk);

/* Validation report for a document without keeping the skeleton:
 * {"valid": bool, "violations": [...], ...}. */
kg_status kg_validate_json(const char* json_text, char** report_json);

/* {"pair": [mu, nu], "mce": [path, ...]} */
kg_status kg_mce(const kg_skeleton* sk, const char* mu_literal, const char* nu_literal,
                 char** report_json);

/* {"F": [...], "veeF": [...]} */
kg_status kg_vee(const kg_skeleton* sk, const char* const* literals, int count,
                 char** report_json);

/* bound is "n1,n2,..." with one entry per color; NULL means 2 per color.
 * {"maxGeneratorMce": int, "argmax": [mu, nu], ...} */
kg_status kg_align(const kg_skeleton* sk, const char* bound, char** report_json);

/* Full check suite: TCK relations on the truncated Fock space, Nica
 * products for every degree pair within the bound, sampled partition and
 * projection identities. */
kg_status kg_check(const kg_skeleton* sk, const char* bound, double tol, uint64_t seed,
                   int samples, char** report_json);

/* sets_json: {"p1,p2": [path literal, ...], ...} or NULL.
 * gens_json: [[color-1 edge ids], ...] or NULL; when given, an avoiding
 * path is searched for and verified in the Fock representation. */
kg_status kg_faithful(const kg_skeleton* sk, const char* vertex_id, const char* sets_json,
                      const char* gens_json, const char* bound, char** report_json);

void kg_string_free(char* s);

const char* kg_version(void);

#ifdef __cplusplus
}
#endif

#endif
