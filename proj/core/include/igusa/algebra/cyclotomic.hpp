#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "igusa/algebra/rational.hpp"

namespace igusa {

// Integer coefficients of the m-th cyclotomic polynomial, degree 0 upward.
std::vector<long> cyclotomic_polynomial(unsigned m);

// Element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1}. Numbers of
// different conductors are combined in Q(zeta_lcm).
class CyclotomicNumber {
 public:
  CyclotomicNumber() : CyclotomicNumber(Rational(0)) {}
  CyclotomicNumber(int v) : CyclotomicNumber(Rational(v)) {}
  CyclotomicNumber(const Rational& v);
  // coords may have any length; they are reduced modulo the cyclotomic polynomial.
  CyclotomicNumber(unsigned conductor, std::vector<Rational> coords);

  static CyclotomicNumber root_of_unity(unsigned m, long k);
  // sum_k counts[k] * zeta_m^k, counts indexed by k in [0, m)
  static CyclotomicNumber from_exponent_counts(unsigned m, std::span<const Rational> counts);

  unsigned conductor() const { return field_->m; }
  const std::vector<Rational>& coordinates() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  CyclotomicNumber embed(unsigned multiple) const;
  CyclotomicNumber conj() const;
  CyclotomicNumber inverse() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o);
  CyclotomicNumber& operator-=(const CyclotomicNumber& o);
  CyclotomicNumber& operator*=(const CyclotomicNumber& o);
  CyclotomicNumber& operator/=(const CyclotomicNumber& o) { return *this *= o.inverse(); }
  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  CyclotomicNumber operator-() const;
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  // "a + b*z + ..." with z = exp(2 pi i / conductor)
  std::string to_string(const std::string& symbol = "z") const;

 private:
  struct Field {
    unsigned m;
    std::vector<long> phi;  // monic, degree = euler phi(m)
  };
  CyclotomicNumber(std::shared_ptr<const Field> field, std::vector<Rational> coords);
  static std::shared_ptr<const Field> make_field(unsigned m);
  void reduce();
  void align(CyclotomicNumber& other);

  std::shared_ptr<const Field> field_;
  std::vector<Rational> coords_;
};

}  // namespace igusa
