#ifndef HYMIN_TEXTIO_HPP
#define HYMIN_TEXTIO_HPP

#include <string>

#include "forms.hpp"

namespace hymin {

// Shared text syntax: terms like "3*x0^2*x1 - x2^3", variables x0..x9,
// integer coefficients, '+'/'-' separators, whitespace insignificant.
// Throws std::invalid_argument on malformed or non-homogeneous input.
// min_vars widens the variable count (e.g. "x0^2" parsed with min_vars 3).
Form parse_form(const std::string& text, int min_vars = 2);

std::string format_form(const Form& f);

std::string format_matrix(const IntMat& m);

} // namespace hymin

#endif
