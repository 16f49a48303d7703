#pragma once

#include <string>

#include "dualvar/multipoly.hpp"

namespace dualvar {

// Canonical text form: terms in decreasing graded-lex order, joined with " + " / " - ",
// integer or integer/integer coefficients, monomials as products like "x0^2*x3".
// parse_poly(format_poly(p)) == p for rational p.
std::string format_poly(const MultiPoly& p);

// Parse the textual grammar over Q. nvars = -1 infers the variable count as
// (largest index used) + 1; an explicit nvars rejects indices outside x0..x{nvars-1}.
// Throws parse_error with line/column on malformed input or unknown variable names.
MultiPoly parse_poly(const std::string& text, int nvars = -1);

} // namespace dualvar
