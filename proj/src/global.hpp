#ifndef HYMIN_GLOBAL_HPP
#define HYMIN_GLOBAL_HPP

#include <map>
#include <optional>
#include <vector>

#include "forms.hpp"

namespace hymin::global {

// thread-safe process-wide RNG seed for the randomized steps (equal-degree
// splitting, Pollard rho); fixed default, settable from the CLI
std::uint64_t default_seed();
void set_default_seed(std::uint64_t seed);

// worker count for the parallelizable pieces (weight-set profiles)
int worker_threads();
void set_worker_threads(int n);

struct FactorResult {
    std::map<mpz_class, int> factors; // prime -> exponent
    bool all_certified = true;        // false if a probable-prime label was used
};

// trial division to 10^6, then Pollard rho (Brent) with a deterministic
// seed; primality by deterministic Miller-Rabin below 2^64, BPSW above
FactorResult factor_integer(const mpz_class& n);

bool is_prime(const mpz_class& n);

// finite supersets of the primes where the form can be non-minimal
std::vector<mpz_class> candidate_primes_binary(const Form& f);
std::vector<mpz_class> candidate_primes_ternary(const Form& f);

// greedy coefficient reduction over unit shears and signed permutations of
// determinant 1; returns (reduced form, unimodular matrix) with
// reduced == F(x * T) and non-increasing euclidean norm
std::pair<Form, IntMat> adhoc_reduce(const Form& f);

struct GlobalRecord {
    IntMat matrix;
    mpz_class scale = 1;                 // scale * output == F(x * matrix)
    std::map<mpz_class, long> scale_exps; // per-prime exponents of the scale
    std::vector<mpz_class> primes_touched;
};

// per-prime minimization in ascending prime order with ad-hoc reduction
// interleaved (3 and 4 variables); primes auto-detected for 2 and 3 variables
// and required for quaternary cubics
std::pair<Form, GlobalRecord> minimize_global(const Form& f,
                                              std::optional<std::vector<mpz_class>> primes);

} // namespace hymin::global

#endif
