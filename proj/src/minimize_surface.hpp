#ifndef HYMIN_MINIMIZE_SURFACE_HPP
#define HYMIN_MINIMIZE_SURFACE_HPP

#include <vector>

#include "forms.hpp"

namespace hymin::surface {

struct StepResult {
    bool success = false;
    Form form;
    IntMat t; // p^e * form == F(x * t)
    long e = 0;
    std::vector<int> weight; // normalized weight read off the Smith form of t
};

// normalized weight vector (Smith exponents minus their minimum) of a step
// matrix with determinant +-p^k
std::vector<int> claimed_weight(const IntMat& t, const mpz_class& p);

// One minimization step at p, trying [0,0,0,1], [0,0,1,1], then per very
// singular point [0,1,1,1] and the [0,1,2,2]/[0,2,2,3] chains.
StepResult one_step(const Form& f, const mpz_class& p);

std::pair<Form, TransformRecord> minimize(const Form& f, const mpz_class& p, long step_cap = 64);

} // namespace hymin::surface

#endif
