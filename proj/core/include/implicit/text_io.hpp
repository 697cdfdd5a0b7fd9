#pragma once

// Plain-text forms of the library's values.
//
// Rational function grammar (whitespace ignored):
//   ratfun := poly | "(" poly ")" "/" "(" poly ")" | poly "/" poly
//   poly   := ["+"|"-"] term {("+"|"-") term}
//   term   := factor {"*" factor}
//   factor := coef | "t" ["^" exp]
//   coef   := integer ["/" integer]
// An integer followed by "/" and another integer is always read as a
// rational literal, so "1/2*t" is (1/2)t while "1/t" is 1 over t.
//
// Bivariate polynomials use the same poly grammar over the variables x, y,
// and print as e.g. "2 - 3*y - x + 2*x*y" (terms in i-major order, zero
// terms omitted, unit coefficients omitted).

#include <string>
#include <string_view>

#include "implicit/bipoly.hpp"
#include "implicit/unipoly.hpp"

namespace implicit {

struct RationalFunction {
  UniPoly numerator;
  UniPoly denominator;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

/// Parses a rational function of t and reduces it to coprime form. Throws
/// ParseError on malformed text or a zero denominator.
RationalFunction parse_rational_function(std::string_view text);

/// Descending powers of var, e.g. "2*t^2 + 2*t + 1"; "0" for the zero polynomial.
std::string render_unipoly(const UniPoly& p, char var = 't');

/// "(num)/(den)", or just the numerator when den == 1.
std::string render_rational_function(const UniPoly& num, const UniPoly& den);

std::string format_bipoly(const BiPoly& f);

/// Parses a polynomial in x and y. Bounds are the largest exponents present.
BiPoly parse_bipoly(std::string_view text);

}  // namespace implicit
