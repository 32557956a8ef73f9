#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qv/laurent.hpp"

namespace qv {

/// Integer-coefficient polynomial produced by the expression parser.
///
/// `vars` lists the recognized variable names; the exponent vector of each term
/// is indexed like `vars`. Only the variable `w` may carry negative exponents.
struct ParsedPoly {
  std::vector<std::string> vars;
  std::map<std::vector<int>, std::int64_t> terms;
};

/// Parses expressions such as `2*w^2-w+1`, `(x-y)*y^2`, `(x-y)y^2`, `w^-2*(1-w)`.
///
/// Grammar: sums of products of powers of numbers, variables and parenthesized
/// subexpressions; `*` may be omitted before `(` or a variable. Throws
/// Error(ParseError) with the column of the offending token.
ParsedPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

/// Parses a Laurent polynomial in `w` with integer coefficients.
IntLaurent parse_laurent(std::string_view text);

}  // namespace qv
