#ifndef ROTCONJ_ROTCONJ_H
#define ROTCONJ_ROTCONJ_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(ROTCONJ_BUILDING)
#    define RC_API __declspec(dllexport)
#  else
#    define RC_API __declspec(dllimport)
#  endif
#else
#  define RC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rc_status {
    RC_OK = 0,
    RC_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad mode, bad sample count */
    RC_ERR_ARITY = 2,            /* wrong number of angles for the group */
    RC_ERR_PARSE = 3,            /* malformed JSON, fraction or expression */
    RC_ERR_UNKNOWN_GROUP = 4,    /* unknown group or covering name */
    RC_ERR_BASIS = 5,            /* undeclared symbol or invalid basis */
    RC_ERR_DOMAIN = 6,           /* element not in the group, exactness required, ... */
    RC_ERR_INTERNAL = 7
} rc_status;

typedef struct rc_session rc_session;

RC_API rc_status rc_session_create(rc_session** out);
RC_API void rc_session_destroy(rc_session* s);

/* Basis JSON: {"symbols": [...], "numeric": {"alpha": 0.41421356, ...}}. NULL clears it. */
RC_API rc_status rc_session_set_basis_json(rc_session* s, const char* basis_json);
RC_API rc_status rc_session_set_seed(rc_session* s, uint64_t seed);
/* Nonzero: plain decimal angles go through rational recognition. */
RC_API rc_status rc_session_set_numeric_angles(rc_session* s, int enabled);

/* Message describing the last failure on this session ("" after success). */
RC_API const char* rc_last_error(const rc_session* s);
RC_API const char* rc_status_name(rc_status status);

/* All results are JSON documents allocated by the library; free with rc_string_free. */
RC_API rc_status rc_classify(rc_session* s, const char* group, const char* mode, const char* rho,
                             const char* rho_prime, int bound, char** out_json);
/* group may be NULL or "" when both elements name their group. */
RC_API rc_status rc_classify_elements(rc_session* s, const char* group, const char* mode, const char* element,
                                      const char* element_prime, char** out_json);
RC_API rc_status rc_reduce(rc_session* s, const char* group, const char* element, char** out_json);
RC_API rc_status rc_witness(rc_session* s, const char* group, const char* rho, const char* rho_prime,
                            int verify_samples, char** out_json);
RC_API rc_status rc_verify(rc_session* s, const char* group, const char* rho, const char* rho_prime, int samples,
                           char** out_json);
RC_API rc_status rc_orbit(rc_session* s, const char* group, const char* rho, int64_t samples, double radius,
                          int include_points, char** out_json);
RC_API rc_status rc_lift(rc_session* s, const char* covering, const char* rho, char** out_json);
RC_API rc_status rc_project(rc_session* s, const char* covering, const char* input, char** out_json);
RC_API rc_status rc_selftest(rc_session* s, char** out_json);

/* 1 if a result document carries an Unknown verdict, 0 otherwise. */
RC_API int rc_result_is_unknown(const char* result_json);

RC_API void rc_string_free(char* str);

#ifdef __cplusplus
}
#endif

#endif
