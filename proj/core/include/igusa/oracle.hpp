#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "igusa/reduction.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

struct OracleOptions {
  int bound = 3;           // B: coefficients of total degree <= B; modulus p^(B+1)
  double budget = 1e8;     // maximum number of residue classes
  unsigned shards = 1;     // x mod p residues are split into this many shards
  unsigned threads = 1;
};

// Counts of residue classes x mod p^m of Z_p^2, keyed by the valuation vector
// k of F(x), the discrete logs of the angular components, and x mod p.
struct OracleHistogram {
  long p = 0;
  int modulus_exponent = 0;
  std::size_t r = 0;
  std::vector<long long> counts;  // flat index, see index()

  std::size_t index(const std::vector<int>& k, const std::vector<long>& dlogs, long x0, long y0) const;
  OracleHistogram& operator+=(const OracleHistogram& o);
  friend bool operator==(const OracleHistogram&, const OracleHistogram&) = default;
};

// Classes with x mod p in `residues` only.
OracleHistogram enumerate_shard(const std::vector<PolyQ>& F, long p, int bound, const std::vector<long>& residues);
OracleHistogram enumerate_histogram(const std::vector<PolyQ>& F, long p, const OracleOptions& options);

struct CoefficientTable {
  long p = 0;
  CharacterTuple chi;
  std::string phi;
  int bound = 0;
  std::map<Exponents, CyclotomicNumber> coefficients;  // every k with |k| <= bound

  std::string to_text() const;
  std::string to_json() const;
};

CoefficientTable coefficient_table(const OracleHistogram& h, const CharacterTuple& chi, const ResidualFunction& phi,
                                   int bound);
CoefficientTable enumerate_coefficients(const std::vector<PolyQ>& F, const CharacterTuple& chi,
                                        const ResidualFunction& phi, long p, const OracleOptions& options = {});

struct Comparison {
  bool equal = true;
  std::optional<Exponents> k;  // first mismatch, by total degree then lexicographically
  CyclotomicNumber closed_form, oracle;
  std::string to_text() const;
};

Comparison compare_with_closed_form(const ZetaFunction& Z, const CoefficientTable& table);

// Closed form for a monomial map: exponents[i][j] is the exponent of
// variable i in f_j.
ZetaFunction monomial_zeta_reference(const std::vector<std::vector<int>>& exponents, long p);

}  // namespace igusa
