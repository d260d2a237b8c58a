#ifndef HYMIN_WEIGHTS_HPP
#define HYMIN_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "forms.hpp"

namespace hymin::weights {

// exponent vectors i with |i| = d in n+1 variables, ascending lex
std::vector<std::vector<int>> index_set(int n, int d);

// f_w over the index set: f_w(i) = max(0, floor(<v_i,w>/(n+1)) + 1) with
// v_i = d*1 - (n+1)*i. Entries follow index_set(n, d) order.
std::vector<long> fw_profile(const WeightVector& w, int n, int d);

// exact dominance: f_w <= f_{w2} pointwise
bool dominates(const WeightVector& w, const WeightVector& w2, int n, int d);

// sufficient inner-product criterion (fast pre-filter, strictly weaker)
bool dominates_prefilter(const WeightVector& w, const WeightVector& w2, int n, int d);

struct MinimalWeightSet {
    int n = 0, d = 0;
    long bound = 0; // entry bound used for the enumeration
    std::vector<WeightVector> vectors;
    bool profile_ties = false; // distinct vectors shared a profile (d <= n)
};

// entry bound for the enumeration: d for n = 2, 2*n*d^{n-1}/gcd(d, n+1) in
// general; n = 1 handled directly
long enumeration_bound(int n, int d);

MinimalWeightSet minimal_complete_set(int n, int d, int threads = 1);

// n = 2 covering-by-basic-intervals construction: complete (not necessarily
// minimal) set with all entries <= d
std::vector<WeightVector> n2_complete_set(int d);

// m_k multiplicities forced on the flag x_{k+1} = ... = x_n = 0, k = 0..n-1
std::vector<long> flag_multiplicities(const WeightVector& w, int n, int d);

} // namespace hymin::weights

#endif
