#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "igusa/algebra/polynomial.hpp"
#include "igusa/algebra/univariate.hpp"
#include "igusa/errors.hpp"

namespace igusa {

struct RationalPoint {
  Rational u, v;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend auto operator<=>(const RationalPoint& a, const RationalPoint& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    return a.v <=> b.v;
  }
};

// A common zero of the system that is not defined over Q.
struct IrrationalSolution : Error {
  IrrationalSolution(UPolyQ minpoly, int coordinate)
      : Error("irrational common zero"), minimal_polynomial(std::move(minpoly)), coordinate(coordinate) {}
  UPolyQ minimal_polynomial;
  int coordinate;  // 0 for the first variable, 1 for the second
};

// Resultant of two bivariate polynomials with respect to variable `var`,
// returned as a polynomial in the remaining variable.
UPolyQ resultant(const PolyQ& f, const PolyQ& g, std::size_t var);

// Rational roots of a univariate polynomial, ascending, without multiplicity.
std::vector<Rational> rational_roots(const UPolyQ& f);

// All common zeros of a zero-dimensional system in two variables. Throws
// IrrationalSolution when a common zero over Qbar is not rational.
std::vector<RationalPoint> rational_common_zeros(std::span<const PolyQ> system);

}  // namespace igusa
