#pragma once

#include <string>
#include <utility>
#include <vector>

#include "igusa/algebra/polynomial.hpp"
#include "igusa/algebra/rational.hpp"

namespace igusa {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class UPolyQ {
 public:
  UPolyQ() = default;
  explicit UPolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPolyQ constant(const Rational& c) { return UPolyQ({c}); }
  static UPolyQ x() { return UPolyQ({Rational(0), Rational(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational evaluate(const Rational& x) const;

  UPolyQ monic() const;
  UPolyQ derivative() const;

  UPolyQ& operator+=(const UPolyQ& o);
  UPolyQ& operator-=(const UPolyQ& o);
  friend UPolyQ operator+(UPolyQ a, const UPolyQ& b) { return a += b; }
  friend UPolyQ operator-(UPolyQ a, const UPolyQ& b) { return a -= b; }
  friend UPolyQ operator*(const UPolyQ& a, const UPolyQ& b);
  friend UPolyQ operator*(UPolyQ a, const Rational& s);
  friend bool operator==(const UPolyQ& a, const UPolyQ& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

std::pair<UPolyQ, UPolyQ> divmod(const UPolyQ& a, const UPolyQ& b);
UPolyQ gcd(UPolyQ a, UPolyQ b);  // monic, zero only if both are zero

// s*a + t*b = g with g = gcd(a, b) monic.
struct ExtendedGcd {
  UPolyQ g, s, t;
};
ExtendedGcd extended_gcd(const UPolyQ& a, const UPolyQ& b);

// Square-free decomposition: list of (square-free monic factor, multiplicity).
std::vector<std::pair<UPolyQ, int>> squarefree_decomposition(const UPolyQ& f);

// Conversions with the sparse representation in one variable.
UPolyQ to_univariate(const PolyQ& f, std::size_t var);
PolyQ from_univariate(const UPolyQ& f, std::size_t nvars, std::size_t var);

// Integer polynomial helpers (coefficients from degree 0 upward).
using ZPoly = std::vector<BigInt>;
// Scales to the primitive integer polynomial with positive leading coefficient;
// returns the content c with f = c * result.
ZPoly primitive_integer_part(const UPolyQ& f, Rational* content = nullptr);
UPolyQ to_rational_poly(const ZPoly& f);

}  // namespace igusa
