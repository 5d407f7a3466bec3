#pragma once

#include <optional>
#include <string>
#include <vector>

#include "igusa/algebra/polynomial.hpp"
#include "igusa/algebra/solve.hpp"

namespace igusa {

enum class DivisorKind { Strict, Exceptional };

struct Divisor {
  int id = 0;
  DivisorKind kind = DivisorKind::Strict;
  std::vector<int> N;  // order of vanishing of each f_j
  long nu = 1;         // order of vanishing of the jacobian, plus one
  std::optional<int> base_point;  // index into ResolutionGraph::lineage (exceptional only)
  std::optional<PolyQ> equation;  // strict components: irreducible equation in x, y
};

enum class ChartKind { Base, A, B };

struct ChartDivisor {
  int divisor = 0;
  PolyQ equation;  // irreducible local equation in the chart variables u, v
};

// A copy of the affine plane with a polynomial map to the base plane. In the
// chart, f_j composed with the map equals unit_constants[j] times the product
// of the local equations raised to N_j, and the jacobian equals
// jacobian_constant times the product over exceptional divisors of
// equation^(nu - 1).
struct Chart {
  int id = 0;
  int parent = -1;
  ChartKind kind = ChartKind::Base;
  RationalPoint center;  // blown-up point, in parent coordinates
  PolyQ to_base_x, to_base_y;
  std::vector<ChartDivisor> divisors;
  std::vector<Rational> unit_constants;
  Rational jacobian_constant{1};
  bool leaf = true;
};

struct IntersectionPoint {
  int first = 0, second = 0;  // divisor ids, first < second
  int chart = -1;             // -1 when the graph was authored without charts
  std::optional<RationalPoint> point;  // chart coordinates
  std::optional<RationalPoint> base;   // image in the base plane
};

// A point of the base plane that was blown up, with every exceptional divisor over it.
struct BasePoint {
  RationalPoint point;
  std::vector<int> divisors;
};

struct ResolutionGraph {
  std::size_t r = 1;
  std::vector<PolyQ> polynomials;
  std::vector<Divisor> divisors;
  std::vector<IntersectionPoint> intersections;
  std::vector<Chart> charts;
  std::vector<BasePoint> lineage;

  bool has_charts() const { return !charts.empty(); }
  const Divisor& divisor(int id) const { return divisors.at(static_cast<std::size_t>(id)); }
  // Number of points of E_i meeting other divisors.
  int intersection_count(int id) const;
  // Divisors met by E_i, one entry per intersection point.
  std::vector<int> neighbours(int id) const;
  // Euler characteristic of E_i minus the other divisors, exceptional only.
  long euler_characteristic(int id) const;
  std::size_t exceptional_count() const;
};

struct ResolveOptions {
  // Pick the next center in the highest-id chart instead of the lowest.
  bool highest_chart_first = false;
  int max_blow_ups = 500;
};

ResolutionGraph resolve(const std::vector<PolyQ>& F, const ResolveOptions& options = {});

// Initial graph: base chart with the strict components, no blow-ups.
ResolutionGraph initial_graph(const std::vector<PolyQ>& F);
void blow_up_point(ResolutionGraph& g, int chart, const RationalPoint& point);
bool is_owned(const ResolutionGraph& g, int chart, const RationalPoint& point);
// Owned points of a leaf chart where the total transform fails to be a
// normal crossing (singular component, tangency, three components).
std::vector<RationalPoint> bad_points(const ResolutionGraph& g, int chart);
// Recomputes the intersection list from the charts.
void compute_intersections(ResolutionGraph& g);

struct StarRelationCheck {
  int divisor = 0;
  std::size_t component = 0;  // index j of f_j
  Rational alpha_sum;         // sum over neighbours of (alpha_t - 1)
  bool sum_ok = false;        // alpha_sum == -2
  bool divisibility_ok = false;  // sum of neighbour N_t divisible by N_i
};
std::vector<StarRelationCheck> validate_star_relations(const ResolutionGraph& g);

struct Stratum {
  std::vector<int> I;  // sorted divisor ids, size 0, 1 or 2
  std::string description;
  int points = 0;      // |I| = 2: number of intersection points
};
std::vector<Stratum> strata(const ResolutionGraph& g);

std::string export_dual_graph(const ResolutionGraph& g);

}  // namespace igusa
