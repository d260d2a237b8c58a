#ifndef HYMIN_FP_GEOMETRY_HPP
#define HYMIN_FP_GEOMETRY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "groebner.hpp"

namespace hymin::fp {

// homogeneous coordinates, first nonzero entry scaled to 1
struct ProjPoint {
    std::vector<std::uint64_t> x;
    bool operator==(const ProjPoint& o) const { return x == o.x; }
    bool operator<(const ProjPoint& o) const { return x < o.x; }
};

// hyperplane coefficients, first nonzero entry scaled to 1
struct ProjLinearForm {
    std::vector<std::uint64_t> c;
    bool operator==(const ProjLinearForm& o) const { return c == o.c; }
    bool operator<(const ProjLinearForm& o) const { return c < o.c; }
};

ProjPoint normalize_point(std::vector<std::uint64_t> x, Zp zp);
ProjLinearForm normalize_form(std::vector<std::uint64_t> c, Zp zp);

// Complete F_p-rational linear factor decomposition f = prod L_i^{m_i} * G
// with G free of F_p-rational linear factors. Works for 2, 3 or 4 variables.
struct LinearFactorization {
    std::vector<std::pair<ProjLinearForm, int>> factors;
    MultiPoly cofactor;
};
LinearFactorization linear_factors(const MultiPoly& f);

// binary homogeneous forms only; factors as above (fp-algebra surface)
std::vector<std::pair<ProjLinearForm, int>> binary_form_linear_factors(const MultiPoly& f);

// The unique point of multiplicity >= threshold+1 on the ternary curve g = 0,
// if any. Divided partials keep the test valid in small characteristic.
// Throws if more than one such point exists (caller contract: threshold > d/2
// on a linear-factor-free curve).
std::optional<ProjPoint> high_multiplicity_point(const MultiPoly& g, int threshold);

// multiplicity of g at a specific projective point (Taylor orders via
// divided partials); used by oracles and tests
int multiplicity_at(const MultiPoly& g, const ProjPoint& pt);

struct SingularLocusReport {
    enum class Kind { finite_points, singular_line, contains_plane };
    Kind kind = Kind::finite_points;
    std::vector<ProjPoint> points;                              // finite case
    std::optional<std::pair<ProjPoint, ProjPoint>> line_span;   // line case
    std::optional<std::pair<ProjLinearForm, ProjLinearForm>> line; // as plane pair
};

// Singular F_p-points of an irreducible quaternary cubic; classifies per the
// at-most-4-points / single-line dichotomy. Inputs with a linear factor are
// reported as contains_plane.
SingularLocusReport cubic_surface_singular_locus(const MultiPoly& f, std::uint64_t seed = 1);

struct VerySingularReport {
    bool whole_line = false;
    std::optional<std::pair<ProjPoint, ProjPoint>> line_span;
    std::vector<ProjPoint> points; // very singular points (empty if whole_line)
};

// Very singular points of a primitive quaternary cubic F at p: singular points
// of the reduction whose integral lift evaluates to 0 mod p^2. When the
// singular locus is a line, tests the residual binary cubic criterion.
VerySingularReport very_singular_points(const Form& f, const mpz_class& p);
VerySingularReport very_singular_points(const Form& f, const mpz_class& p,
                                        const SingularLocusReport& locus);

// --- integral movers --------------------------------------------------------

// unimodular T with [1:0:...:0] * T-bar = P
IntMat move_point_to_first(const ProjPoint& p, const mpz_class& prime);

// unimodular T whose reduction maps the span of e_0, e_1 onto the line
// through P and Q
IntMat move_line_to_front(const ProjPoint& p, const ProjPoint& q, const mpz_class& prime);

// unimodular T with ^T-bar L = lambda * x_{n-1}
IntMat move_hyperplane_to_last(const ProjLinearForm& l, const mpz_class& prime);

} // namespace hymin::fp

#endif
