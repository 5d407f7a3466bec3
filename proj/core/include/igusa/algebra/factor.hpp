#pragma once

#include <utility>
#include <vector>

#include "igusa/algebra/polynomial.hpp"
#include "igusa/algebra/univariate.hpp"

namespace igusa {

// f = unit * prod factor^multiplicity, factors primitive over Z with positive
// leading coefficient, sorted by (degree, coefficients).
struct UnivariateFactorization {
  Rational unit;
  std::vector<std::pair<UPolyQ, int>> factors;
};
UnivariateFactorization factor(const UPolyQ& f);

// Irreducible factors over Q of a polynomial in any number of variables; the
// multivariate path uses Kronecker substitution, so keep degrees small.
struct MultivariateFactorization {
  Rational unit;
  std::vector<std::pair<PolyQ, int>> factors;
};
MultivariateFactorization factor(const PolyQ& f);

// Primitive integer multiple with positive leading coefficient (graded lex);
// f = content * result.
PolyQ primitive_part(const PolyQ& f, Rational* content = nullptr);

}  // namespace igusa
