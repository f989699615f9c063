#pragma once

#include <string>

#include "leibniz/poly.hpp"

namespace leibniz {

/// Parse the polynomial grammar
///   poly   := '-'? term (('+'|'-') term)*
///   term   := coeff? factor+
///   coeff  := integer | integer '/' integer | '[' scalar ']'
///   factor := var pow? | '(' poly ')' pow?
///   var    := 'x' positive-integer
///   pow    := '^(' positive-integer ')' | '^' positive-integer
/// Powers are left-normed repetitions (the ab^(n) convention); parenthesized
/// subproducts are expanded through the Leibniz identity.  Bracketed scalar
/// coefficients cover extension-field constants such as [t+1].
LeibnizPoly parse_poly(const Field &field, const std::string &text);

/// Canonical text: words in canonical order, runs compressed to ^(n).
/// parse_poly(format_poly(f)) == f.
std::string format_poly(const LeibnizPoly &f);

} // namespace leibniz
