/* C interface to the atlas of two-generator p-groups with Property P.
 *
 * All strings returned through char** are heap-allocated JSON (or text for
 * presentations) and must be released with pga_string_free. On a non-zero
 * status the out-parameters are left untouched and pga_last_error() describes
 * the failure; the message is per thread and valid until the next call.
 */
#ifndef PGATLAS_H
#define PGATLAS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PGA_API __declspec(dllexport)
#else
#define PGA_API __attribute__((visibility("default")))
#endif

typedef enum pga_status {
    PGA_OK = 0,
    PGA_E_INVALID_ARGUMENT = 1,
    PGA_E_UNSUPPORTED_PRIME = 2,
    PGA_E_NOT_ADMISSIBLE = 3,
    PGA_E_NOT_PROPERTY_P = 4,
    PGA_E_BOUND_EXCEEDED = 5,
    PGA_E_PARSE = 6,
    PGA_E_NOT_FOUND = 7,
    PGA_E_UNSUPPORTED = 8,
    PGA_E_INTERNAL = 9
} pga_status;

typedef struct pga_group pga_group;

PGA_API const char* pga_last_error(void);
PGA_API const char* pga_status_name(pga_status s);
PGA_API void pga_string_free(char* s);
PGA_API const char* pga_version(void);

/* Limit on |G| for anything that enumerates elements. */
PGA_API void pga_set_max_order(uint64_t order);
PGA_API uint64_t pga_get_max_order(void);

/* {"p":..,"n":..,"m":..,"zrank":..,"alpha":[..],...}; the datum must be consistent. */
PGA_API pga_status pga_group_from_json(const char* json, pga_group** out);
/* type_json is {"type":"D1","params":{"n":2,"t":1}}. */
PGA_API pga_status pga_group_construct(const char* type_json, int p, pga_group** out);
PGA_API void pga_group_free(pga_group* g);

PGA_API pga_status pga_group_to_json(const pga_group* g, char** out);
PGA_API pga_status pga_group_order(const pga_group* g, uint64_t* out);
/* Subgroup data, fingerprint, I_min/I_max, case and Property P. */
PGA_API pga_status pga_group_invariants(const pga_group* g, char** out);

/* {"type":..,"params":{..}} */
PGA_API pga_status pga_classify(const pga_group* g, char** out);
/* The type plus the case, characteristic data and transform witness. */
PGA_API pga_status pga_classify_detailed(const pga_group* g, char** out);

/* *result is 1 or 0. With witness != NULL and an isomorphism found, receives
 * {"a":[i,j,k,u0,u1],"b":[...]}: images of a and b in h. */
PGA_API pga_status pga_isomorphic(const pga_group* g, const pga_group* h, int* result, char** witness);

/* The printed presentation with exponents evaluated, e.g. "<a, b | a^8 = ...>". */
PGA_API pga_status pga_presentation(const char* type_json, int p, char** out);

/* case_name is one of I, II, IIIa, IIIb, IV.
 * {"case":..,"p":..,"n":..,"m":..,"data":[GroupData..],"families":[type..]} */
PGA_API pga_status pga_enumerate(const char* case_name, int p, int n, int m, char** out);

/* Report JSON as documented in docs/verify_report_schema.md; *ok is 1 when the
 * report has no discrepancies. */
PGA_API pga_status pga_verify(const char* case_name, int p, int n, int m, char** report, int* ok);
/* kind is "i-theorems", "list" or "minimal-orders". */
PGA_API pga_status pga_verify_suite(const char* kind, char** report, int* ok);

/* Congruence class representatives of invertible (or singular) 2x2 matrices
 * over F_p with orbit sizes. */
PGA_API pga_status pga_transversal(int p, int invertible, char** out);
/* Normal form of a row-major matrix and the X with normal = X A X^t. */
PGA_API pga_status pga_congruence_normal_form(int p, const int entries[4], char** out);

#ifdef __cplusplus
}
#endif

#endif
