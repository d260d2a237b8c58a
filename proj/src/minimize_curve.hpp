#ifndef HYMIN_MINIMIZE_CURVE_HPP
#define HYMIN_MINIMIZE_CURVE_HPP

#include "forms.hpp"

namespace hymin::curve {

enum class Strategy { dfs, bfs, best };

struct StepResult {
    bool success = false;
    Form form;
    IntMat t; // p^e * form == F(x * t)
    long e = 0;
    long nodes = 0; // diagnostics only, never asserted
};

long v011(const Form& f, const mpz_class& p);
long v001(const Form& f, const mpz_class& p);

// max(w1 + w2) over the minimal complete weight set for plane curves of
// degree d (cached for d <= 40), else the 2d-1 bound
int delta_bound(int d);

StepResult one_step(const Form& f, const mpz_class& p, Strategy strategy = Strategy::dfs);

std::pair<Form, TransformRecord> minimize(const Form& f, const mpz_class& p,
                                          Strategy strategy = Strategy::dfs);

} // namespace hymin::curve

#endif
