#include "igusa/algebra/rational_function.hpp"

#include <sstream>

namespace igusa {

PolyQ DenominatorFactor::polynomial(long q) const {
  PolyQ f = PolyQ::constant(N.size(), Rational(1));
  f.add_term(Exponents(N.begin(), N.end()), -pow(Rational(q), -nu));
  return f;
}

std::string DenominatorFactor::to_string() const {
  std::ostringstream os;
  os << "(1 - q^-" << nu << "*t^(";
  for (std::size_t i = 0; i < N.size(); ++i) os << (i ? "," : "") << N[i];
  os << "))";
  return os.str();
}

PolyC to_cyclotomic(const PolyQ& f) {
  return f.map_coefficients([](const Rational& c) { return CyclotomicNumber(c); });
}

RationalFunctionT::RationalFunctionT(long q, PolyC numerator, std::map<DenominatorFactor, int> denominator)
    : q_(q), r_(numerator.nvars()), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  for (auto it = denominator_.begin(); it != denominator_.end();)
    it = it->second <= 0 ? denominator_.erase(it) : std::next(it);
}

PolyC RationalFunctionT::denominator_polynomial() const {
  PolyC d = PolyC::constant(r_, CyclotomicNumber(1));
  for (const auto& [f, m] : denominator_)
    for (int i = 0; i < m; ++i) d *= to_cyclotomic(f.polynomial(q_));
  return d;
}

namespace {
PolyC product_of(const std::map<DenominatorFactor, int>& factors, long q, std::size_t r) {
  PolyC d = PolyC::constant(r, CyclotomicNumber(1));
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) d *= to_cyclotomic(f.polynomial(q));
  return d;
}
}  // namespace

RationalFunctionT& RationalFunctionT::operator+=(const RationalFunctionT& o) {
  if (r_ == 0) {
    *this = o;
    return *this;
  }
  // common multiple: max multiplicity per factor
  std::map<DenominatorFactor, int> common = denominator_, extra_self, extra_other;
  for (const auto& [f, m] : o.denominator_) common[f] = std::max(common[f], m);
  for (const auto& [f, m] : common) {
    auto a = denominator_.find(f);
    auto b = o.denominator_.find(f);
    int ma = a == denominator_.end() ? 0 : a->second;
    int mb = b == o.denominator_.end() ? 0 : b->second;
    if (m > ma) extra_self[f] = m - ma;
    if (m > mb) extra_other[f] = m - mb;
  }
  numerator_ = numerator_ * product_of(extra_self, q_, r_) + o.numerator_ * product_of(extra_other, q_, r_);
  denominator_ = std::move(common);
  return *this;
}

RationalFunctionT operator*(const RationalFunctionT& a, const RationalFunctionT& b) {
  std::map<DenominatorFactor, int> d = a.denominator_;
  for (const auto& [f, m] : b.denominator_) d[f] += m;
  return RationalFunctionT(a.q_, a.numerator_ * b.numerator_, std::move(d));
}

RationalFunctionT& RationalFunctionT::operator*=(const CyclotomicNumber& s) {
  numerator_ *= s;
  return *this;
}

bool RationalFunctionT::equals(const RationalFunctionT& o) const {
  return numerator_ * o.denominator_polynomial() == o.numerator_ * denominator_polynomial();
}

std::map<Exponents, CyclotomicNumber> taylor_coefficients(const RationalFunctionT& Z, int max_total_degree) {
  std::size_t r = Z.r();
  auto truncate = [&](PolyC& p) {
    PolyC t(r);
    for (const auto& [e, c] : p.terms())
      if (total_degree(e) <= max_total_degree) t.add_term(e, c);
    p = std::move(t);
  };
  PolyC acc = Z.numerator();
  truncate(acc);
  for (const auto& [f, m] : Z.denominator()) {
    int step = 0;
    for (int v : f.N) step += v;
    if (step == 0) throw std::domain_error("denominator factor with N = 0 has no expansion at t = 0");
    // geometric series sum_k q^{-nu k} t^{N k}
    PolyC series(r);
    for (int k = 0; k * step <= max_total_degree; ++k) {
      Exponents e(f.N.begin(), f.N.end());
      for (auto& v : e) v *= k;
      series.add_term(e, CyclotomicNumber(pow(Rational(Z.q()), -f.nu * k)));
    }
    for (int i = 0; i < m; ++i) {
      acc *= series;
      truncate(acc);
    }
  }
  std::map<Exponents, CyclotomicNumber> out;
  for (const auto& [e, c] : acc.terms()) out.emplace(e, c);
  return out;
}

}  // namespace igusa
