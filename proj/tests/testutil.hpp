#ifndef HYMIN_TESTUTIL_HPP
#define HYMIN_TESTUTIL_HPP

#include <random>
#include <string>

#include "forms.hpp"
#include "textio.hpp"
#include "weights.hpp"

namespace hymin::testutil {

inline Form random_form(std::mt19937_64& rng, int n_vars, int degree, int coeff_bound,
                        double density = 1.0) {
    auto idx = weights::index_set(n_vars - 1, degree);
    Form f(n_vars, degree);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::uniform_real_distribution<double> keep(0.0, 1.0);
    for (const auto& e : idx) {
        if (keep(rng) > density) continue;
        f.add_term(e, coeff(rng));
    }
    if (f.is_zero()) {
        Expo e(static_cast<std::size_t>(n_vars), 0);
        e[0] = degree;
        f.add_term(e, 1);
    }
    return f;
}

inline IntMat random_unimodular(std::mt19937_64& rng, int n, int shears = 6, int bound = 2) {
    IntMat m = IntMat::identity(static_cast<std::size_t>(n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> amt(-bound, bound);
    for (int s = 0; s < shears; ++s) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        IntMat e = IntMat::identity(static_cast<std::size_t>(n));
        e(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = amt(rng);
        m = m * e;
    }
    return m;
}

inline Form parse(const std::string& s, int min_vars = 2) { return parse_form(s, min_vars); }

} // namespace hymin::testutil

#endif
