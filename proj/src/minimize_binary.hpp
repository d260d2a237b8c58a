#ifndef HYMIN_MINIMIZE_BINARY_HPP
#define HYMIN_MINIMIZE_BINARY_HPP

#include "forms.hpp"

namespace hymin::binary {

struct StepResult {
    bool success = false;
    Form form;
    IntMat t; // p^e * form == F(x * t)
    long e = 0;
};

// Formal resultant of the two partials (degree d-1 framing); a nonzero
// invariant exactly when F has no repeated factor. Drives the termination cap.
mpz_class partial_resultant(const Form& f);

// One minimization step at p: requires the reduction to carry a linear factor
// of multiplicity > d/2, applies [0,1] at it.
StepResult one_step(const Form& f, const mpz_class& p);

std::pair<Form, TransformRecord> minimize(const Form& f, const mpz_class& p);

} // namespace hymin::binary

#endif
