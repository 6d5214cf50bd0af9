/* bipdisc: signed K_{n,n} discrepancy toolkit.
 *
 * C interface over the C++ core. All objects are opaque handles created and
 * destroyed through these functions; every call returns a bd_status, with
 * outputs through pointer arguments. Strings returned through char** are
 * heap-allocated; release them with bd_string_free. Handles are immutable
 * after creation and safe to share across threads.
 */
#ifndef BIPDISC_H
#define BIPDISC_H

#include <stdint.h>

#if defined(_WIN32)
#define BIPDISC_API __declspec(dllexport)
#else
#define BIPDISC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bd_status {
    BD_OK = 0,
    BD_ERR_ARGUMENT = 1,     /* bad parameter or option */
    BD_ERR_PARSE = 2,        /* malformed signing/factorization text */
    BD_ERR_DIMENSION = 3,    /* size mismatch between objects */
    BD_ERR_BOUND_UNMET = 4,  /* ran to completion, target bound not met */
    BD_ERR_CONSTRUCTION = 5, /* a construction stage failed */
    BD_ERR_IO = 6,           /* file could not be read or written */
    BD_ERR_INTERNAL = 7
} bd_status;

typedef struct bd_signing bd_signing;
typedef struct bd_factorization bd_factorization;

BIPDISC_API const char* bd_version(void);
BIPDISC_API const char* bd_status_name(bd_status status);
/* Message for the most recent failure on this thread ("" if none). */
BIPDISC_API const char* bd_last_error(void);
BIPDISC_API void bd_string_free(char* s);

/* --- signings ----------------------------------------------------------- */

/* Text format: line 1 = n, then n lines of n characters from {+,-}. */
BIPDISC_API bd_status bd_signing_parse(const char* text, bd_signing** out);
BIPDISC_API bd_status bd_signing_read(const char* path, bd_signing** out);
/* options_json: {"kind":"all-plus|all-minus|random|one-sided|perturbed",
 *                "n":8, "seed":1, "orientation":"x|y", "k":3} */
BIPDISC_API bd_status bd_signing_generate(const char* options_json, bd_signing** out);
BIPDISC_API bd_status bd_signing_serialize(const bd_signing* s, char** text_out);
BIPDISC_API bd_status bd_signing_write(const bd_signing* s, const char* path);
BIPDISC_API int bd_signing_size(const bd_signing* s);
/* +1 or -1; 0 when out of range. */
BIPDISC_API int bd_signing_entry(const bd_signing* s, int row, int col);
BIPDISC_API void bd_signing_free(bd_signing* s);

/* --- factorizations ------------------------------------------------------ */

/* Text format: line 1 = n, then n lines of n space-separated 0-based ints. */
BIPDISC_API bd_status bd_factorization_parse(const char* text, bd_factorization** out);
BIPDISC_API bd_status bd_factorization_read(const char* path, bd_factorization** out);
BIPDISC_API bd_status bd_factorization_serialize(const bd_factorization* f, char** text_out);
BIPDISC_API bd_status bd_factorization_write(const bd_factorization* f, const char* path);
BIPDISC_API int bd_factorization_size(const bd_factorization* f);
/* Column that matching `t` assigns to row `row`; -1 when out of range. */
BIPDISC_API int bd_factorization_entry(const bd_factorization* f, int t, int row);
BIPDISC_API void bd_factorization_free(bd_factorization* f);

/* --- analysis and constructions ------------------------------------------ */

/* JSON: {"n","disc","disc_exact","s","s1","s2","s2_trace","switcher_density"} */
BIPDISC_API bd_status bd_analyze(const bd_signing* s, char** report_json);

/* options_json: {"strategy":"auto|cyclic|switcher", "seed":1,
 *                "max_tries":100, "eta":"1/8", "epsilon":"1/2",
 *                "crown_mode":"exact|heuristic", "crown_cache":"dir"}.
 * On BD_OK or BD_ERR_BOUND_UNMET *fact_out holds the factorization. */
BIPDISC_API bd_status bd_factorize(const bd_signing* s, const char* options_json,
                                   bd_factorization** fact_out, char** report_json);

/* bound is a rational string ("0", "1/5", "0.2"). BD_OK when the minimum
 * matching discrepancy reaches it, BD_ERR_BOUND_UNMET otherwise. */
BIPDISC_API bd_status bd_verify(const bd_signing* s, const bd_factorization* f, const char* bound,
                                char** report_json);

/* options_json: {"epsilon":"1/2","seed":1}. JSON mirrors the certify command:
 * {"branch","alpha","eta","c","details",...}. */
BIPDISC_API bd_status bd_certify(const bd_signing* s, const char* options_json,
                                 char** report_json);

/* Generic command runner: takes one command request (see README schema) and
 * returns the full run report. The process exit code convention
 * (0/2/3/4) is returned through exit_code_out. */
BIPDISC_API bd_status bd_run_command(const char* request_json, char** report_json,
                                     int* exit_code_out);

#ifdef __cplusplus
}
#endif

#endif /* BIPDISC_H */
