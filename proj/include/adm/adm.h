/* C interface to the Adomian decomposition solver.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an adm_status; on
 * failure adm_last_error() describes the problem (per thread). Strings handed
 * out through char** parameters are heap-allocated and must be released with
 * adm_string_free.
 */
#ifndef ADM_ADM_H
#define ADM_ADM_H

#include <stddef.h>

#if defined(ADM_BUILDING_LIBRARY)
#  define ADM_API __attribute__((visibility("default")))
#else
#  define ADM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adm_status {
  ADM_OK = 0,
  ADM_ERR_INVALID_ARGUMENT = 1,
  ADM_ERR_PARSE = 2,
  ADM_ERR_DIVISION_BY_ZERO = 3,
  ADM_ERR_RADICAND_MISMATCH = 4,
  ADM_ERR_RATE_MISMATCH = 5,
  ADM_ERR_DEGREE_CAP = 6,
  ADM_ERR_NO_REFERENCE = 7,
  ADM_ERR_UNBOUND_PARAMETER = 8,
  ADM_ERR_POLE = 9,
  ADM_ERR_INTERNAL = 10
} adm_status;

typedef struct adm_problem adm_problem;
typedef struct adm_solution adm_solution;

typedef struct adm_error_row {
  double x;
  double t;
  unsigned order;
  double approx;
  double exact;
  double abs_err;
  int flagged; /* nonzero when an evaluation failed; numeric fields are NaN */
} adm_error_row;

ADM_API const char* adm_status_string(adm_status status);
ADM_API const char* adm_last_error(void);
ADM_API void adm_string_free(char* text);

/* Problems: "fisher:<rational>", "fisher:alpha", "nws-case2", "nws-case3",
 * or "inline:k=..;a=..;b=..;q=..;u0=[..]/[..];rate=..". */
ADM_API adm_status adm_problem_parse(const char* spec, adm_problem** out);
ADM_API void adm_problem_free(adm_problem* problem);
/* Multi-line header: name, equation, nonlinearity and generator legend. */
ADM_API adm_status adm_problem_describe(const adm_problem* problem, char** text);
ADM_API int adm_problem_has_reference(const adm_problem* problem);
ADM_API adm_status adm_problem_exact(const adm_problem* problem, double x, double t, double* out);

ADM_API adm_status adm_solve(const adm_problem* problem, unsigned order, adm_solution** out);
ADM_API void adm_solution_free(adm_solution* solution);
ADM_API unsigned adm_solution_order(const adm_solution* solution);
/* u_n rendered one line per t-power. */
ADM_API adm_status adm_solution_term_text(const adm_solution* solution, unsigned n, char** text);
ADM_API adm_status adm_solution_eval(const adm_solution* solution, unsigned order, double x,
                                     double t, double* out);
/* Finite-difference residual of the order-N partial sum; h <= 0 selects 1e-4. */
ADM_API adm_status adm_solution_fd_residual(const adm_solution* solution, unsigned order, double x,
                                            double t, double h_x, double h_t, double* out);
/* Fills rows (x outer, t middle, order inner); capacity must be nx*nt*norders. */
ADM_API adm_status adm_error_table(const adm_solution* solution, const double* xs, size_t nx,
                                   const double* ts, size_t nt, const unsigned* orders,
                                   size_t norders, adm_error_row* rows, size_t capacity,
                                   size_t* count);

/* A_0..A_order for f(u) = c0 + c1 u + ... with symbolic u_0..u_order,
 * one "A_n = ..." line each. `coeffs` is "c0,c1,...". */
ADM_API adm_status adm_adomian_symbolic(const char* coeffs, unsigned order, char** text);
/* A_n evaluated on a solution's terms; coeffs may be NULL to use the
 * problem's own nonlinearity. */
ADM_API adm_status adm_adomian_solution(const adm_solution* solution, const char* coeffs, unsigned n,
                                        char** text);

#ifdef __cplusplus
}
#endif

#endif
