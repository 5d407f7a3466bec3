#include "igusa/algebra/cyclotomic.hpp"

#include <numeric>

#include "igusa/algebra/polynomial.hpp"
#include "igusa/algebra/univariate.hpp"

namespace igusa {

namespace {

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// f *= (x^d - 1) or f /= (x^d - 1), exact integer arithmetic.
void mul_binomial(std::vector<long>& f, unsigned d) {
  std::vector<long> r(f.size() + d, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    r[i + d] += f[i];
    r[i] -= f[i];
  }
  f = std::move(r);
}

void div_binomial(std::vector<long>& f, unsigned d) {
  // f = (x^d - 1) q: q_i = -(f_i - q_{i-d})
  std::vector<long> q(f.size() - d, 0);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = -(f[i] - (i >= d ? q[i - d] : 0));
  f = std::move(q);
}

}  // namespace

std::vector<long> cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw std::invalid_argument("conductor must be positive");
  std::vector<long> f{1};
  for (unsigned d = 1; d <= m; ++d)
    if (m % d == 0 && mobius(m / d) == 1) mul_binomial(f, d);
  for (unsigned d = 1; d <= m; ++d)
    if (m % d == 0 && mobius(m / d) == -1) div_binomial(f, d);
  if (f.back() < 0)
    for (auto& c : f) c = -c;
  return f;
}

std::shared_ptr<const CyclotomicNumber::Field> CyclotomicNumber::make_field(unsigned m) {
  if (m == 1) {
    static const auto rationals = std::make_shared<const Field>(Field{1, {-1, 1}});
    return rationals;
  }
  return std::make_shared<const Field>(Field{m, cyclotomic_polynomial(m)});
}

CyclotomicNumber::CyclotomicNumber(const Rational& v) : field_(make_field(1)), coords_{v} {}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const Field> field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  reduce();
}

CyclotomicNumber::CyclotomicNumber(unsigned conductor, std::vector<Rational> coords)
    : CyclotomicNumber(make_field(conductor), std::move(coords)) {}

void CyclotomicNumber::reduce() {
  const auto& phi = field_->phi;
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = coords_.size(); i-- > deg;) {
    Rational c = coords_[i];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < deg; ++k)
      if (phi[k]) coords_[i - deg + k] -= c * Rational(phi[k]);
  }
  coords_.resize(deg);
}

CyclotomicNumber CyclotomicNumber::root_of_unity(unsigned m, long k) {
  long e = ((k % static_cast<long>(m)) + m) % m;
  std::vector<Rational> c(e + 1);
  c[e] = Rational(1);
  return CyclotomicNumber(m, std::move(c));
}

CyclotomicNumber CyclotomicNumber::from_exponent_counts(unsigned m, std::span<const Rational> counts) {
  std::vector<Rational> c(counts.begin(), counts.end());
  return CyclotomicNumber(m, std::move(c));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (!coords_[i].is_zero()) return false;
  return true;
}

std::optional<Rational> CyclotomicNumber::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coords_.empty() ? Rational(0) : coords_[0];
}

CyclotomicNumber CyclotomicNumber::embed(unsigned multiple) const {
  unsigned m = field_->m;
  if (multiple == m) return *this;
  if (multiple % m) throw std::invalid_argument("embedding target is not a multiple of the conductor");
  unsigned step = multiple / m;
  std::vector<Rational> c((coords_.empty() ? 0 : (coords_.size() - 1) * step) + 1);
  for (std::size_t i = 0; i < coords_.size(); ++i) c[i * step] = coords_[i];
  return CyclotomicNumber(make_field(multiple), std::move(c));
}

void CyclotomicNumber::align(CyclotomicNumber& other) {
  unsigned a = field_->m, b = other.field_->m;
  if (a == b) return;
  unsigned l = std::lcm(a, b);
  if (l != a) *this = embed(l);
  if (l != b) other = other.embed(l);
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
  CyclotomicNumber other = o;
  align(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
  CyclotomicNumber other = o;
  align(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
  if (o.field_->m == 1) {
    for (auto& c : coords_) c *= o.coords_[0];
    return *this;
  }
  CyclotomicNumber other = o;
  align(other);
  std::vector<Rational> r(coords_.size() + other.coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coords_.size(); ++j)
      if (!other.coords_[j].is_zero()) r[i + j] += coords_[i] * other.coords_[j];
  }
  coords_ = std::move(r);
  reduce();
  return *this;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  std::vector<Rational> c;
  for (const auto& v : coords_) c.push_back(-v);
  return CyclotomicNumber(field_, std::move(c));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  CyclotomicNumber x = a, y = b;
  x.align(y);
  return x.coords_ == y.coords_;
}

CyclotomicNumber CyclotomicNumber::conj() const {
  unsigned m = field_->m;
  std::vector<Rational> c(m);
  for (std::size_t i = 0; i < coords_.size(); ++i) c[(m - i) % m] += coords_[i];
  return CyclotomicNumber(field_, std::move(c));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  std::vector<Rational> phi;
  for (long v : field_->phi) phi.emplace_back(v);
  auto eg = extended_gcd(UPolyQ(coords_), UPolyQ(std::move(phi)));
  // gcd is 1 because the cyclotomic polynomial is irreducible
  return CyclotomicNumber(field_, eg.s.coefficients());
}

std::string CyclotomicNumber::to_string(const std::string& symbol) const {
  if (is_rational()) return as_rational()->to_string();
  std::vector<Rational> c = coords_;
  return UPolyQ(std::move(c)).to_string(symbol);
}

}  // namespace igusa
