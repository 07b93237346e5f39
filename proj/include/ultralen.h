#ifndef ULTRALEN_H
#define ULTRALEN_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ULX_API __declspec(dllexport)
#else
#define ULX_API __attribute__((visibility("default")))
#endif

/* Every function returning int returns ULX_OK or one of the codes below and
   sets a thread-local message readable through ulx_last_error(). */
enum {
  ULX_OK = 0,
  ULX_INVALID_ARGUMENT = 1,
  ULX_ODD_TYPE_IN_ALT = 2,
  ULX_SINGULAR = 3,
  ULX_CHAR_TWO_SYMMETRIC = 4,
  ULX_HYPOTHESIS_VIOLATED = 5,
  ULX_CAP_EXCEEDED = 6,
  ULX_IDENTITY_ELEMENT = 7,
  ULX_NOT_SIMPLE = 8,
  ULX_BAD_RANK = 9,
  ULX_RANK_TOO_LARGE_FOR_EXACT = 10,
  ULX_BOUND_VIOLATED = 11,
  ULX_CENTRAL_H = 12,
  ULX_NOT_IN_ORBIT = 13,
  ULX_NO_SPLIT = 14,
  ULX_RANK_TOO_SMALL = 15,
  ULX_UNREALIZABLE = 16,
  ULX_INDEX_OUT_OF_RANGE = 17,
  ULX_SEARCH_EXHAUSTED = 18,
  ULX_CONFIG_INVALID = 19,
  ULX_INTERNAL = 99
};

typedef struct ulx_torus ulx_torus;
typedef struct ulx_cert ulx_cert;

ULX_API const char* ulx_version(void);
ULX_API const char* ulx_last_error(void);
ULX_API const char* ulx_error_name(int code);
/* Strings handed out by the library are released with ulx_free_string. */
ULX_API void ulx_free_string(char* s);

/* Experiments: name is one of ulx_experiment_name(0..count-1); config is
   key=value lines. *ok is 1 when every checked invariant held. */
ULX_API int ulx_experiment_count(void);
ULX_API const char* ulx_experiment_name(int i);
ULX_API int ulx_run(const char* name, const char* config, char** report, int* ok);

/* Acceptance criteria 1..13, one summary line each. */
ULX_API int ulx_acceptance_count(void);
ULX_API int ulx_acceptance_run(int id, unsigned long long seed, char** line, int* pass);

/* Symmetric groups: lengths of a cycle type given as a list of parts. */
ULX_API int ulx_cycle_type_lengths(int n, const int* parts, int nparts, int alternating, double* ell_H, double* ell_r,
                                   double* ell_c);

/* Torus elements: type "A", "B", "C" or "D"; angles as "p/q" strings in units
   of pi, comma separated (rank+1 of them for A, rank otherwise). */
ULX_API int ulx_torus_create(const char* type, int rank, const char* angles, ulx_torus** out);
ULX_API void ulx_torus_free(ulx_torus* t);
ULX_API int ulx_torus_lambda(const ulx_torus* t, double* value);
ULX_API int ulx_torus_lambda_tilde(const ulx_torus* t, double* value, int* exact);
ULX_API int ulx_torus_ell1_prime(const ulx_torus* t, double* value);
/* Writes up to cap profile values; *len receives the full length. */
ULX_API int ulx_torus_profile(const ulx_torus* t, double* values, int cap, int* len);

/* Decomposition certificates. */
ULX_API int ulx_su2_decompose(const char* theta_g, const char* theta_h, int m, ulx_cert** out);
ULX_API int ulx_torus_decompose(const ulx_torus* g, const ulx_torus* h, int m, ulx_cert** out);
ULX_API int ulx_large_rank_decompose(const ulx_torus* g, const ulx_torus* h, int k, int m, ulx_cert** out);
ULX_API void ulx_cert_free(ulx_cert* c);
ULX_API int ulx_cert_count(const ulx_cert* c);
ULX_API double ulx_cert_error(const ulx_cert* c);
ULX_API long long ulx_cert_bound(const ulx_cert* c);
ULX_API int ulx_cert_exact(const ulx_cert* c);
ULX_API int ulx_cert_json(const ulx_cert* c, char** json);

/* Strong coloring of the cycle 1..n with blocks given flat, s entries each,
   covering 1..n rounded up to a multiple of s. colors receives n' + 1
   entries; index 0 is unused. */
ULX_API int ulx_strong_color(int n, const int* blocks, int nblocks, int s, int* colors);

#ifdef __cplusplus
}
#endif

#endif
