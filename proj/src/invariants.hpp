#ifndef HYMIN_INVARIANTS_HPP
#define HYMIN_INVARIANTS_HPP

#include <optional>
#include <string>
#include <utility>

#include "forms.hpp"

namespace hymin::inv {

struct InvariantValue {
    mpz_class value;
    int coeff_degree = 0;
    std::string tag;
};

struct Covariant {
    int source_degree = 0;
    Form result;
    std::string tag;
};

// product and true partial derivative of integral forms
Form form_mul(const Form& a, const Form& b);
Form form_partial(const Form& f, int var);

// k-th transvectant of three ternary forms: Delta^k applied to
// F(x) G(y) H(z) with y, z set back to x. Expanded multinomially over the six
// commuting determinant terms; raw integer normalization (no content
// division).
Form transvectant(const Form& f, const Form& g, const Form& h, int k);

// Hessian determinant (matrix of true second partials)
Form hessian(const Form& f);

// I1 = U^d(F,F,F), I2 = U^6(G,G,G) with G = U^{d-2}(F,F,F); even degree only
std::pair<InvariantValue, InvariantValue> invariants_even(const Form& f);

// cubic covariant U^{d-1}(F,F,F) for odd d >= 5; for d = 3 the form itself
Covariant cubic_covariant(const Form& f);

// classical c4/c6 of a ternary cubic, normalized so the reference cubic
// x0*x1*x2 + x1^3 + x2^3 evaluates to (1, -1)
std::pair<InvariantValue, InvariantValue> ternary_cubic_invariants(const Form& cubic);

// some nonzero invariant value usable as a termination certificate, if one of
// the standard ones is nonzero
std::optional<mpz_class> semistability_certificate(const Form& f);

} // namespace hymin::inv

#endif
