#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "igusa/algebra/cyclotomic.hpp"
#include "igusa/resolution.hpp"

namespace igusa {

bool is_prime(long n);
long smallest_primitive_root(long p);

// chi_j(g^k) = zeta_{p-1}^{e_j k} with g the smallest primitive root mod p.
struct CharacterTuple {
  long p = 2;
  long generator = 1;
  std::vector<long> exponents;

  static CharacterTuple make(long p, std::vector<long> exponents);
  static CharacterTuple trivial(long p, std::size_t r) { return make(p, std::vector<long>(r, 0)); }
  // Every tuple of characters of order dividing p - 1, in lexicographic order.
  static std::vector<CharacterTuple> all(long p, std::size_t r);

  unsigned conductor() const { return static_cast<unsigned>(p - 1); }
  long order(std::size_t j) const;
  bool is_trivial() const;
  std::string to_string() const;
  friend bool operator==(const CharacterTuple&, const CharacterTuple&) = default;
};

bool gamma_condition(const std::vector<int>& N, const CharacterTuple& chi);

// Locally constant function on Z_p^2 that only depends on the residue mod p.
struct ResidualFunction {
  enum class Kind { UnitBall, OriginClass, Table };
  Kind kind = Kind::UnitBall;
  long p = 0;  // table only
  Rational default_value;
  std::map<std::pair<long, long>, Rational> values;

  static ResidualFunction unit_ball() { return {}; }
  static ResidualFunction origin_class() { return {Kind::OriginClass, 0, {}, {}}; }
  // {"p": 7, "default": "0", "values": [{"x": 0, "y": 0, "value": "1/2"}, ...]}
  static ResidualFunction from_json(const std::string& text);

  Rational value(long x, long y) const;  // residues in [0, p)
  std::string tag() const;
};

// Local equation reduced mod p, as (coefficient, deg u, deg v) triples.
struct ReducedPolynomial {
  std::vector<std::tuple<long, int, int>> terms;
  long evaluate(long u, long v, long p) const;
  bool is_constant() const;
};

struct ReducedChart {
  int id = 0;
  long center_u = 0, center_v = 0;
  ReducedPolynomial to_base_x, to_base_y;
  std::vector<int> divisor_ids;
  std::vector<ReducedPolynomial> equations, d_u, d_v;
  std::vector<long> unit_constants;
};

// One owned point class of the census: divisors through the point, base
// residue, and discrete logs of the units u_j at the point.
struct CensusKey {
  std::vector<int> I;
  long base_x = 0, base_y = 0;
  std::vector<long> unit_dlogs;
  friend auto operator<=>(const CensusKey&, const CensusKey&) = default;
};

struct ReducedGraph {
  ResolutionGraph graph;
  long p = 0;
  std::vector<long> dlog;  // dlog[a] for a in [1, p)
  std::vector<ReducedChart> charts;
  std::map<CensusKey, long> census;  // empty without chart data
  long total_points = 0;

  bool has_census() const { return graph.has_charts(); }
  bool owned(int chart, long u, long v) const;
  // Divisors through a chart point (any chart, owned or not).
  std::vector<int> divisors_at(int chart, long u, long v) const;
};

ReducedGraph reduce_mod_p(const ResolutionGraph& g, long p);

// Omega_chi at a point of a leaf or interior chart; the point need not be owned.
CyclotomicNumber omega_chi(const ReducedGraph& rg, int chart, long u, long v, const CharacterTuple& chi);

CyclotomicNumber c_coefficient(const std::vector<int>& I, const CharacterTuple& chi, const ResidualFunction& phi,
                               const ReducedGraph& rg);

long count_stratum_points(const std::vector<int>& I, const ReducedGraph& rg);

}  // namespace igusa
