/*
 * C API for the psl2codes library.
 *
 * All computations run through psl2codes_run(): configure an opaque handle,
 * name a command, receive a JSON document. Return codes double as process
 * exit codes for the CLI:
 *
 *   0  success, result consistent with the expected classification
 *   1  run completed but found a theorem-inconsistent result (or an
 *      internal invariant was violated)
 *   2  usage error (bad command, bad argument)
 *   3  resource cap exceeded
 *
 * Strings returned through out-parameters are heap-allocated; release them
 * with psl2codes_string_free().
 */

#ifndef PSL2CODES_H
#define PSL2CODES_H

#ifdef __cplusplus
extern "C" {
#endif

#define PSL2CODES_OK 0
#define PSL2CODES_INCONSISTENT 1
#define PSL2CODES_USAGE_ERROR 2
#define PSL2CODES_CAP_EXCEEDED 3

typedef struct psl2codes_config psl2codes_config;

psl2codes_config* psl2codes_config_new(void);
void psl2codes_config_free(psl2codes_config* cfg);

/*
 * Integer settings. Known keys: "n", "seed", "trials", "extremal" (0/1),
 * "max_dimension", "max_group_order", "max_spin_n".
 * Returns PSL2CODES_OK or PSL2CODES_USAGE_ERROR for an unknown key.
 */
int psl2codes_config_set(psl2codes_config* cfg, const char* key, long long value);

/*
 * Commands: "field", "cosets", "qr", "classify", "spin", "designs",
 * "fourier-check", "witness". On return codes 0 and 1, *json_out receives
 * the result document. On 2 and 3, *json_out is untouched and
 * psl2codes_last_error() describes the failure.
 */
int psl2codes_run(const psl2codes_config* cfg, const char* command, char** json_out);

/* Render a result document as human-readable text. */
int psl2codes_render_text(const char* json, char** text_out);

void psl2codes_string_free(char* s);

/* Message for the most recent failure on this thread; never NULL. */
const char* psl2codes_last_error(void);

const char* psl2codes_version(void);

#ifdef __cplusplus
}
#endif

#endif
