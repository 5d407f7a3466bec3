#pragma once

#include <string>
#include <vector>

#include "igusa/algebra/cyclotomic.hpp"
#include "igusa/algebra/parse.hpp"
#include "igusa/resolution.hpp"

namespace igusa {
inline void PrintTo(const CyclotomicNumber& c, std::ostream* os) { *os << c.to_string(); }
inline void PrintTo(const Rational& c, std::ostream* os) { *os << c.to_string(); }
}  // namespace igusa

namespace igusa::testing {

inline PolyQ P(const std::string& s) { return parse_polynomial(s); }

inline ResolutionGraph resolve_all(const std::vector<std::string>& polys) {
  std::vector<PolyQ> F;
  for (const auto& s : polys) F.push_back(P(s));
  return resolve(F);
}

inline Rational Q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

// Corpus used across suites.
struct CorpusEntry {
  std::string name;
  std::vector<std::string> polys;
};

inline std::vector<CorpusEntry> corpus() {
  return {{"x", {"x"}},         {"xy", {"x*y"}},   {"x2y3", {"x^2*y^3"}},
          {"cusp", {"y^2-x^3"}}, {"x,y", {"x", "y"}}, {"x,xy", {"x", "x*y"}}};
}

}  // namespace igusa::testing
