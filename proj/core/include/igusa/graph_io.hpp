#pragma once

#include <string>
#include <string_view>

#include "igusa/resolution.hpp"

namespace igusa {

// JSON interchange format. Charts are optional: a graph written by hand with
// only divisors, (N, nu) data and intersections supports the pole and
// monodromy computations but not point counting.
std::string graph_to_json(const ResolutionGraph& g);
ResolutionGraph graph_from_json(std::string_view text);

}  // namespace igusa
