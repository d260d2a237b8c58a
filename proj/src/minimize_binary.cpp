#include "minimize_binary.hpp"

#include <stdexcept>

#include "fp_geometry.hpp"
#include "multipoly.hpp"

namespace hymin::binary {

mpz_class partial_resultant(const Form& f) {
    if (f.n_vars() != 2) throw std::invalid_argument("partial_resultant: binary form required");
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("partial_resultant: degree >= 2 required");
    // coefficient vectors of dF/dx0 and dF/dx1 as univariate in t = x1 with
    // x0 = 1, framed at degree d-1
    std::vector<mpz_class> a(static_cast<std::size_t>(d), 0), b(static_cast<std::size_t>(d), 0);
    for (const auto& [e, c] : f.terms()) {
        int i = e[0], j = e[1];
        if (i > 0) a[static_cast<std::size_t>(j)] += c * i;          // x0^(i-1) x1^j
        if (j > 0) b[static_cast<std::size_t>(j - 1)] += c * j;      // x0^i x1^(j-1)
    }
    return sylvester_resultant(a, d - 1, b, d - 1);
}

StepResult one_step(const Form& f, const mpz_class& p) {
    if (f.n_vars() != 2) throw std::invalid_argument("minimize_binary: binary form required");
    int d = f.degree();
    if (d < 2) throw std::invalid_argument("minimize_binary: degree >= 2 required");
    StepResult fail{false, f, IntMat::identity(2), 0};
    auto v = valuation(f, p);
    if (!v || *v != 0) throw std::invalid_argument("minimize_binary: form not primitive at p");

    fp::MultiPoly fbar = fp::reduce_mod_p(f, p);
    auto factors = fp::binary_form_linear_factors(fbar);
    for (const auto& [l, m] : factors) {
        if (2 * m <= d) continue; // need multiplicity > d/2
        IntMat t = fp::move_hyperplane_to_last(l, p);
        auto [g, e] = apply_weight(f, t, WeightVector{{0, 1}}, p);
        if (2 * e > d) {
            IntMat full = IntMat::diag_p_powers(p, {0, 1}) * t;
            return StepResult{true, g, full, e};
        }
        break; // at most one factor of multiplicity > d/2
    }
    return fail;
}

std::pair<Form, TransformRecord> minimize(const Form& f, const mpz_class& p) {
    if (f.is_zero()) throw std::invalid_argument("minimize_binary: zero form");
    int d = f.degree();
    long e = *valuation(f, p);
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    Form g = f.divided_by(pe);
    IntMat t = IntMat::identity(2);

    mpz_class cert = partial_resultant(g);
    long cap = 64;
    if (cert != 0) {
        long vd = 0;
        mpz_class x = abs(cert);
        while (x % p == 0) {
            x /= p;
            ++vd;
        }
        cap = vd + 1;
    }
    long steps = 0;
    for (;;) {
        StepResult s = one_step(g, p);
        if (!s.success) break;
        if (++steps > cap) throw std::runtime_error("minimize_binary: step cap exceeded (input unstable at p?)");
        g = s.form;
        t = s.t * t;
        e += s.e;
    }
    (void)d;
    return {g, TransformRecord{t, e, p}};
}

} // namespace hymin::binary
