/* C interface to the hypersurface minimization library.
 *
 * All functions returning int use the status codes below; on failure the
 * thread-local message from hymin_last_error() describes the problem.
 * Strings returned through char** outputs are heap-allocated and must be
 * released with hymin_string_free().
 */
#ifndef HYMIN_H
#define HYMIN_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    HYMIN_OK = 0,
    HYMIN_ERROR = 1,    /* internal failure */
    HYMIN_CONTRACT = 2, /* precondition or input contract violated */
    HYMIN_RESOURCE = 3  /* enumeration or step cap exceeded */
};

typedef struct hymin_form hymin_form;

const char* hymin_last_error(void);

/* seed for the randomized steps (root splitting, Pollard rho) */
void hymin_set_seed(uint64_t seed);
uint64_t hymin_get_seed(void);

/* worker threads for the parallelizable internals (default 1) */
void hymin_set_threads(int n);

/* forms: shared text syntax "3*x0^2*x1 - x2^3" */
int hymin_form_parse(const char* text, hymin_form** out);
int hymin_form_clone(const hymin_form* f, hymin_form** out);
void hymin_form_free(hymin_form* f);
int hymin_form_to_string(const hymin_form* f, char** out);
void hymin_string_free(char* s);
int hymin_form_degree(const hymin_form* f);
int hymin_form_num_vars(const hymin_form* f);

/* weight vectors, one "[0,w1,...,wn]" per line; raw != 0 skips minimization
 * (n = 2 only: the covering construction) */
int hymin_weights(int n, int d, int raw, char** out);

/* JSON results; see README for the schema */
int hymin_invariants(const hymin_form* f, char** json_out);
int hymin_minimize(const hymin_form* f, const char* prime, const char* strategy, char** json_out);
int hymin_minimize_global(const hymin_form* f, const char* primes_csv, char** json_out);
int hymin_detect_primes(const hymin_form* f, char** json_out);
int hymin_reduce(const hymin_form* f, char** json_out);
int hymin_oracle_minimize(const hymin_form* f, const char* prime, unsigned long max_lattices,
                          char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* HYMIN_H */
