/* C interface to the g2cub library. */
#ifndef G2CUB_G2CUB_H
#define G2CUB_G2CUB_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(G2CUB_BUILDING)
#define G2CUB_API __declspec(dllexport)
#else
#define G2CUB_API __declspec(dllimport)
#endif
#else
#define G2CUB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g2cub_status {
  G2CUB_OK = 0,
  G2CUB_E_INVALID_ARGUMENT = 1,
  G2CUB_E_DOMAIN = 2,
  G2CUB_E_NO_CONVERGENCE = 3,
  G2CUB_E_ILL_CONDITIONED = 4,
  G2CUB_E_IO = 5,
  G2CUB_E_INTERNAL = 6
} g2cub_status;

typedef struct g2cub_rule g2cub_rule;
typedef struct g2cub_poly g2cub_poly;
typedef struct g2cub_report g2cub_report;

G2CUB_API const char* g2cub_status_string(g2cub_status s);
/* Message of the last failure on the calling thread; never NULL. */
G2CUB_API const char* g2cub_last_error(void);
/* Strings returned through char** out parameters. */
G2CUB_API void g2cub_string_free(char* s);

/* Quadrature order cap per axis; 0 restores G2CUB_QUAD_CAP or 512. */
G2CUB_API void g2cub_set_quad_cap(int cap);

G2CUB_API g2cub_status g2cub_dim_pi_star(long n, long* out);
/* family: "cc", "sc", "cs" or "ss". */
G2CUB_API g2cub_status g2cub_gamma_size(const char* family, long n, long* out);
/* Generalized trigonometric function of index (k1, k2, -k1-k2) at (t1, t2, -t1-t2). */
G2CUB_API g2cub_status g2cub_trig_eval(const char* family, long k1, long k2, double t1, double t2, double* out);

/* kind: "gauss", "lobatto", "radau1" or "radau2"; n >= 1. */
G2CUB_API g2cub_status g2cub_rule_new(const char* kind, int n, g2cub_rule** out);
G2CUB_API void g2cub_rule_free(g2cub_rule* r);
G2CUB_API size_t g2cub_rule_size(const g2cub_rule* r);
G2CUB_API g2cub_status g2cub_rule_node(const g2cub_rule* r, size_t i, double* x, double* y, double* w);
G2CUB_API g2cub_status g2cub_rule_info(const g2cub_rule* r, int* n, double* alpha, double* beta,
                                       int* exact_mdegree);
G2CUB_API g2cub_status g2cub_rule_to_json(const g2cub_rule* r, char** out);
G2CUB_API g2cub_status g2cub_rule_to_csv(const g2cub_rule* r, char** out);

/* Exact rational coefficients when alpha, beta are +-1/2; otherwise
   Gram-Schmidt with float coefficients and unit leading coefficient. */
G2CUB_API g2cub_status g2cub_poly_new(double alpha, double beta, int k1, int k2, g2cub_poly** out);
G2CUB_API void g2cub_poly_free(g2cub_poly* p);
G2CUB_API int g2cub_poly_is_exact(const g2cub_poly* p);
G2CUB_API g2cub_status g2cub_poly_eval(const g2cub_poly* p, double x, double y, double* out);
/* Eigen-relation residual (0 for the exact families). */
G2CUB_API g2cub_status g2cub_poly_residual(const g2cub_poly* p, double* out);
G2CUB_API g2cub_status g2cub_poly_to_json(const g2cub_poly* p, char** out);
G2CUB_API g2cub_status g2cub_poly_to_string(const g2cub_poly* p, char** out);

/* suite: "orthogonality", "cubature", "eigen", "identities" or "variety".
   n <= 0 selects the suite default; tol <= 0 keeps per-check tolerances. */
G2CUB_API g2cub_status g2cub_verify(const char* suite, int n, double tol, g2cub_report** out);
G2CUB_API void g2cub_report_free(g2cub_report* r);
G2CUB_API int g2cub_report_passed(const g2cub_report* r);
G2CUB_API size_t g2cub_report_size(const g2cub_report* r);
/* name stays valid until the report is freed. */
G2CUB_API g2cub_status g2cub_report_check(const g2cub_report* r, size_t i, const char** name, double* value,
                                          double* tol, int* pass);
G2CUB_API g2cub_status g2cub_report_to_text(const g2cub_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* G2CUB_G2CUB_H */
