#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "igusa/algebra/polynomial.hpp"

namespace igusa {

// Grammar: sums and products of rational literals, variables and
// parenthesised expressions, '^' with a non-negative integer exponent,
// '/' by a nonzero constant. Juxtaposition like "3x" is accepted as a product.
PolyQ parse_polynomial(std::string_view text, const std::vector<std::string>& variables = {"x", "y"});

}  // namespace igusa
