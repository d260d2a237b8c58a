#ifndef HYMIN_ORACLE_HPP
#define HYMIN_ORACLE_HPP

#include <optional>
#include <vector>

#include "forms.hpp"

namespace hymin::oracle {

// All sublattice matrices in Hermite form (upper triangular, column-reduced)
// with determinant p^sum(w) and Smith type diag(p^w0, ..., p^wn). One matrix
// per coset of G_w; v_p(F(x*M)) is a left-unimodular invariant.
// Throws std::length_error when the enumeration exceeds `cap` candidates.
std::vector<IntMat> coset_lattices(const WeightVector& w, const mpz_class& p,
                                   unsigned long cap = 1000000);

// cached per (w, p); enumerated once, reused across forms
const std::vector<IntMat>& cached_lattices(const WeightVector& w, const mpz_class& p,
                                           unsigned long cap = 1000000);

// one unimodular coset representative per lattice: H = U^{-1} D V^{-1} gives
// T = V^{-1} with M_w * T left-equivalent to H (cross-check path)
std::vector<IntMat> coset_representatives(const WeightVector& w, const mpz_class& p,
                                          unsigned long cap = 1000000);

struct StepResult {
    bool success = false;
    Form form;
    IntMat t;
    long e = 0;
};

// try every (lattice, w) in deterministic order (w by ascending sum then lex,
// matrices in enumeration order); succeed on the first with (n+1)e > d*sum(w)
StepResult one_step(const Form& f, const mpz_class& p,
                    const std::vector<WeightVector>& weight_set, unsigned long cap = 1000000);

// weight set defaulted to the minimal complete set for the form's shape
StepResult one_step(const Form& f, const mpz_class& p, unsigned long cap = 1000000);

std::pair<Form, TransformRecord> minimize(const Form& f, const mpz_class& p,
                                          unsigned long cap = 1000000, long step_cap = 64);

} // namespace hymin::oracle

#endif
