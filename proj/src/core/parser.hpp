#pragma once

#include <map>
#include <string>

#include "core/poly.hpp"

namespace jps {

// Expression grammar: variables x1..x4; rational literals n or n/m; operators
// + - * / ^ with integer exponents; parentheses; named parameters (k, J1, ...)
// substituted as rational constants. Division is restricted to nonzero
// constant divisors. Throws parse_error with the offending position.
Poly parse_poly(const std::string& text, const std::map<std::string, Rat>& params = {});

} // namespace jps
