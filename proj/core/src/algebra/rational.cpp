#include "igusa/algebra/rational.hpp"

#include "igusa/errors.hpp"

namespace igusa {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto strip = [](std::string& t) {
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
  };
  strip(s);
  if (s.empty()) throw ParseError("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s, 10));
    std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    strip(a);
    strip(b);
    return Rational(BigInt(a, 10), BigInt(b, 10));
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal '" + s + "'");
  } catch (const std::domain_error&) {
    throw ParseError("zero denominator in '" + s + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

namespace {
long int_valuation(BigInt n, long p) {
  long v = 0;
  BigInt pp = p;
  while (n % pp == 0) {
    n /= pp;
    ++v;
  }
  return v;
}
}  // namespace

long valuation(const Rational& x, long p) {
  if (x.is_zero()) throw std::domain_error("valuation of zero");
  return int_valuation(x.numerator(), p) - int_valuation(x.denominator(), p);
}

long long residue(const Rational& x, long long modulus) {
  BigInt m = static_cast<long>(modulus);
  BigInt num = x.numerator() % m;
  BigInt den = x.denominator() % m;
  if (num < 0) num += m;
  if (den < 0) den += m;
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error("denominator " + x.denominator().get_str() + " is not invertible mod " +
                            m.get_str());
  BigInt r = (num * inv) % m;
  return r.get_si();
}

}  // namespace igusa
