#include "igusa/algebra/univariate.hpp"

#include <sstream>

namespace igusa {

Rational UPolyQ::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPolyQ UPolyQ::monic() const {
  if (c_.empty()) return *this;
  return *this * leading().inverse();
}

UPolyQ UPolyQ::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return UPolyQ(std::move(d));
}

UPolyQ& UPolyQ::operator+=(const UPolyQ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPolyQ& UPolyQ::operator-=(const UPolyQ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPolyQ operator*(const UPolyQ& a, const UPolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPolyQ(std::move(r));
}

UPolyQ operator*(UPolyQ a, const Rational& s) {
  for (auto& c : a.c_) c *= s;
  a.trim();
  return a;
}

std::string UPolyQ::to_string(const std::string& var) const {
  return from_univariate(*this, 1, 0).to_string(std::vector<std::string>{var});
}

std::pair<UPolyQ, UPolyQ> divmod(const UPolyQ& a, const UPolyQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> r = a.coefficients();
  int db = b.degree();
  if (a.degree() < db) return {UPolyQ(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  Rational inv = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = r[i] * inv;
    q[i - db] = c;
    if (c.is_zero()) continue;
    for (int k = 0; k <= db; ++k) r[i - db + k] -= c * b[k];
  }
  r.resize(db);
  return {UPolyQ(std::move(q)), UPolyQ(std::move(r))};
}

UPolyQ gcd(UPolyQ a, UPolyQ b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const UPolyQ& a, const UPolyQ& b) {
  UPolyQ r0 = a, r1 = b, s0 = UPolyQ::constant(1), s1, t0, t1 = UPolyQ::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPolyQ s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = r0.leading().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<std::pair<UPolyQ, int>> squarefree_decomposition(const UPolyQ& f) {
  std::vector<std::pair<UPolyQ, int>> out;
  if (f.degree() < 1) return out;
  // Yun's algorithm
  UPolyQ a = f.monic();
  UPolyQ b = a.derivative();
  UPolyQ c = gcd(a, b);
  UPolyQ w = divmod(a, c).first;
  UPolyQ y = divmod(b, c).first;
  UPolyQ z = y - w.derivative();
  int i = 1;
  while (w.degree() > 0) {
    UPolyQ g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

UPolyQ to_univariate(const PolyQ& f, std::size_t var) {
  std::vector<Rational> c(std::max(f.degree_in(var), -1) + 1);
  for (const auto& [e, coef] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != var && e[i] != 0) throw std::invalid_argument("polynomial is not univariate");
    c[e[var]] += coef;
  }
  return UPolyQ(std::move(c));
}

PolyQ from_univariate(const UPolyQ& f, std::size_t nvars, std::size_t var) {
  PolyQ r(nvars);
  for (int i = 0; i <= f.degree(); ++i) {
    Exponents e(nvars, 0);
    e[var] = i;
    r.add_term(e, f[i]);
  }
  return r;
}

ZPoly primitive_integer_part(const UPolyQ& f, Rational* content) {
  if (f.is_zero()) {
    if (content) *content = Rational(0);
    return {};
  }
  BigInt l = 1, g = 0;
  for (const auto& c : f.coefficients()) l = lcm(l, c.denominator());
  ZPoly z;
  for (const auto& c : f.coefficients()) {
    BigInt v = c.numerator() * (l / c.denominator());
    g = gcd(g, v);
    z.push_back(v);
  }
  if (z.back() < 0) g = -g;
  for (auto& v : z) v /= g;
  if (content) *content = Rational(g, l);
  return z;
}

UPolyQ to_rational_poly(const ZPoly& f) {
  std::vector<Rational> c;
  for (const auto& v : f) c.emplace_back(v);
  return UPolyQ(std::move(c));
}

Polynomial<ModP> reduce_polynomial(const PolyQ& f, long p) {
  Polynomial<ModP> r(f.nvars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, ModP(residue(c, p), p));
  return r;
}

}  // namespace igusa
