#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "igusa/algebra/cyclotomic.hpp"
#include "igusa/algebra/polynomial.hpp"

namespace igusa {

using PolyC = Polynomial<CyclotomicNumber>;

// The binomial 1 - q^{-nu} t^N.
struct DenominatorFactor {
  long nu = 0;
  std::vector<int> N;
  friend auto operator<=>(const DenominatorFactor&, const DenominatorFactor&) = default;
  PolyQ polynomial(long q) const;
  std::string to_string() const;
};

// numerator / prod factor^multiplicity in the variables t_1..t_r.
class RationalFunctionT {
 public:
  RationalFunctionT() = default;
  RationalFunctionT(long q, std::size_t r) : q_(q), r_(r), numerator_(r) {}
  RationalFunctionT(long q, PolyC numerator, std::map<DenominatorFactor, int> denominator);

  long q() const { return q_; }
  std::size_t r() const { return r_; }
  const PolyC& numerator() const { return numerator_; }
  const std::map<DenominatorFactor, int>& denominator() const { return denominator_; }
  PolyC denominator_polynomial() const;

  RationalFunctionT& operator+=(const RationalFunctionT& o);
  friend RationalFunctionT operator+(RationalFunctionT a, const RationalFunctionT& b) { return a += b; }
  friend RationalFunctionT operator*(const RationalFunctionT& a, const RationalFunctionT& b);
  RationalFunctionT& operator*=(const CyclotomicNumber& s);

  // Equality as rational functions (cross multiplication).
  bool equals(const RationalFunctionT& o) const;

  // Value at t = 0.
  CyclotomicNumber value_at_zero() const { return numerator_.constant_term(); }

 private:
  long q_ = 0;
  std::size_t r_ = 0;
  PolyC numerator_;
  std::map<DenominatorFactor, int> denominator_;
};

PolyC to_cyclotomic(const PolyQ& f);

// Coefficients of t^k for total degree |k| <= max_total_degree.
std::map<Exponents, CyclotomicNumber> taylor_coefficients(const RationalFunctionT& Z, int max_total_degree);

}  // namespace igusa
