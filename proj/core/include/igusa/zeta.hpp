#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "igusa/algebra/rational_function.hpp"
#include "igusa/reduction.hpp"

namespace igusa {

// sum_j N_j s_j + nu = 0, scaled so that gcd(N, nu) = 1.
struct Hyperplane {
  std::vector<int> N;
  long nu = 1;

  static Hyperplane normalized(const std::vector<int>& N, long nu);
  std::string to_string() const;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

struct ZetaTerm {
  std::vector<int> I;
  CyclotomicNumber c;
  std::vector<DenominatorFactor> factors;  // one per i in I
};

struct ZetaFunction {
  RationalFunctionT fn;
  std::vector<ZetaTerm> terms;
  long p = 0;
  CharacterTuple chi;
  std::string phi;
};

ZetaFunction denef_zeta(const ReducedGraph& rg, const CharacterTuple& chi, const ResidualFunction& phi);

std::set<Hyperplane> candidate_poles(const ResolutionGraph& g, const std::optional<CharacterTuple>& chi = std::nullopt);
std::set<Hyperplane> actual_polar_hyperplanes(const RationalFunctionT& Z);
inline std::set<Hyperplane> actual_polar_hyperplanes(const ZetaFunction& Z) { return actual_polar_hyperplanes(Z.fn); }
// Keeps H when some strict divisor, or exceptional divisor with at least
// three intersection points, normalizes to H.
std::set<Hyperplane> unmask_filter(const ResolutionGraph& g, const std::set<Hyperplane>& candidates);

// Limit as every s_j -> -infinity, term by term: each factor tends to 1 - q.
CyclotomicNumber degree_limit(const ZetaFunction& Z);
// The same limit from the assembled rational function, along t_1 = ... = t_r = T -> infinity.
CyclotomicNumber ray_limit(const RationalFunctionT& Z);

bool holomorphy_test(const ZetaFunction& Z);

std::string zeta_to_text(const ZetaFunction& Z);
std::string zeta_to_json(const ZetaFunction& Z);

}  // namespace igusa
