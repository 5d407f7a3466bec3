#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "igusa/algebra/rational.hpp"
#include "igusa/errors.hpp"

namespace igusa {

using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Graded lex, larger first, so that begin() of a term map is the leading term.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Sparse polynomial in a fixed number of variables. R needs construction from
// int, ring operators, == and is_zero(); division additionally needs operator/.
template <class R>
class Polynomial {
 public:
  using Coefficient = R;
  using TermMap = std::map<Exponents, R, GrlexGreater>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const R& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(e, R(1));
  }
  static Polynomial monomial(const Exponents& e, const R& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && igusa::total_degree(terms_.begin()->first) == 0);
  }
  R constant_term() const { return coefficient(Exponents(nvars_, 0)); }
  R coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? R(0) : it->second;
  }
  int total_degree() const { return terms_.empty() ? -1 : igusa::total_degree(terms_.begin()->first); }
  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }
  // Lowest total degree of a term (order of vanishing at the origin).
  int order() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int t = igusa::total_degree(e);
      if (d < 0 || t < d) d = t;
    }
    return d;
  }
  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const R& leading_coefficient() const { return terms_.begin()->second; }

  void add_term(const Exponents& e, const R& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    adopt(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  Polynomial& operator*=(const R& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const R& s) { return a *= s; }
  friend Polynomial operator*(const R& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d(e);
      --d[var];
      r.add_term(d, c * R(e[var]));
    }
    return r;
  }

  template <class S, class Convert>
  S evaluate_with(std::span<const S> point, Convert&& convert) const {
    S acc = S(0);
    for (const auto& [e, c] : terms_) {
      S t = convert(c);
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }
  R evaluate(std::span<const R> point) const {
    return evaluate_with<R>(point, [](const R& c) { return c; });
  }

  // Substitute images[i] for variable i.
  Polynomial compose(std::span<const Polynomial> images) const {
    std::size_t n = images.empty() ? nvars_ : images.front().nvars();
    Polynomial r(n);
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& [e, c] : terms_) {
      Polynomial t = constant(n, c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(n, R(1)));
        while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
        if (e[i] > 0) t *= pw[e[i]];
      }
      r += t;
    }
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using S = decltype(f(std::declval<const R&>()));
    Polynomial<S> r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, f(c));
    return r;
  }

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  void adopt(const Polynomial& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

using PolyQ = Polynomial<Rational>;

template <class R>
Polynomial<R> pow(const Polynomial<R>& base, unsigned exponent) {
  Polynomial<R> r = Polynomial<R>::constant(base.nvars(), R(1));
  Polynomial<R> b = base;
  while (exponent) {
    if (exponent & 1u) r *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return r;
}

namespace detail {
inline std::string coefficient_text(const Rational& c) { return c.to_string(); }
template <class R>
std::string coefficient_text(const R& c) {
  return "(" + c.to_string() + ")";
}
template <class R>
bool is_unit_coefficient(const R& c, bool& negative) {
  if constexpr (std::is_same_v<R, Rational>) {
    negative = c.sign() < 0;
    return c.abs().is_one();
  } else {
    negative = false;
    return c == R(1);
  }
}
}  // namespace detail

inline std::vector<std::string> default_variable_names(std::size_t n) {
  if (n == 2) return {"x", "y"};
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("t" + std::to_string(i + 1));
  return v;
}

template <class R>
std::string Polynomial<R>::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = false;
    bool unit = detail::is_unit_coefficient(c, negative);
    bool constant_term = igusa::total_degree(e) == 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (!unit || constant_term) {
      if constexpr (std::is_same_v<R, Rational>)
        os << c.abs().to_string();
      else
        os << detail::coefficient_text(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

template <class R>
std::string Polynomial<R>::to_string() const {
  auto names = default_variable_names(nvars_);
  return to_string(names);
}

template <class R>
struct DivisionResult {
  Polynomial<R> quotient;
  Polynomial<R> remainder;
};

// Multivariate division by a single divisor under graded lex order; the
// remainder is zero exactly when g divides f.
template <class R>
DivisionResult<R> divide(const Polynomial<R>& f, const Polynomial<R>& g) {
  if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::size_t n = std::max(f.nvars(), g.nvars());
  Polynomial<R> q(n), r(n), p = f;
  const Exponents& lg = g.leading_exponents();
  const R& cg = g.leading_coefficient();
  while (!p.is_zero()) {
    Exponents lp = p.leading_exponents();
    R cp = p.leading_coefficient();
    if (divides(lg, lp)) {
      Exponents d(lp);
      for (std::size_t i = 0; i < d.size(); ++i) d[i] -= lg[i];
      auto t = Polynomial<R>::monomial(d, cp / cg);
      q += t;
      p -= t * g;
    } else {
      auto t = Polynomial<R>::monomial(lp, cp);
      r += t;
      p -= t;
    }
  }
  return {std::move(q), std::move(r)};
}

template <class R>
Polynomial<R> exact_div(const Polynomial<R>& f, const Polynomial<R>& g) {
  auto res = divide(f, g);
  if (!res.remainder.is_zero()) throw NotDivisible();
  return std::move(res.quotient);
}

enum class PolyOp { Add, Sub, Mul, ExactDiv };

template <class R>
Polynomial<R> poly_arith(const Polynomial<R>& a, const Polynomial<R>& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
    case PolyOp::ExactDiv: return exact_div(a, b);
  }
  throw std::logic_error("unknown polynomial operation");
}

// Single-divisor division used for the factor (1 - c t^N) tests; nullopt when
// the remainder is nonzero.
template <class R>
std::optional<Polynomial<R>> binomial_divide(const Polynomial<R>& f, const Polynomial<R>& g) {
  auto res = divide(f, g);
  if (!res.remainder.is_zero()) return std::nullopt;
  return std::move(res.quotient);
}

// Element of Z/p used as a coefficient ring for reductions. A zero modulus
// marks an integer literal that adopts the modulus of its partner.
class ModP {
 public:
  ModP() = default;
  ModP(int v) : value_(v), p_(0) {}
  ModP(long long v, long long p) : value_(p ? ((v % p) + p) % p : v), p_(p) {}

  long long value() const { return value_; }
  long long modulus() const { return p_; }
  bool is_zero() const { return p_ ? value_ == 0 : value_ == 0; }

  ModP& operator+=(const ModP& o) { return combine(o, value_ + o.value_); }
  ModP& operator-=(const ModP& o) { return combine(o, value_ - o.value_); }
  ModP& operator*=(const ModP& o) { return combine(o, value_ * o.value_); }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse_in(p_ ? p_ : o.p_); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const { return ModP(-value_, p_); }
  friend bool operator==(const ModP& a, const ModP& b) {
    long long p = a.p_ ? a.p_ : b.p_;
    if (!p) return a.value_ == b.value_;
    return ((a.value_ - b.value_) % p + p) % p == 0;
  }
  std::string to_string() const { return std::to_string(value_); }

 private:
  ModP& combine(const ModP& o, long long raw) {
    long long p = p_ ? p_ : o.p_;
    p_ = p;
    value_ = p ? ((raw % p) + p) % p : raw;
    return *this;
  }
  ModP inverse_in(long long p) const {
    long long a = ((value_ % p) + p) % p, m = p, x0 = 0, x1 = 1;
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    while (a > 1) {
      long long q = a / m, t = m;
      m = a % m;
      a = t;
      t = x0;
      x0 = x1 - q * x0;
      x1 = t;
    }
    return ModP(x1, p);
  }

  long long value_ = 0;
  long long p_ = 0;
};

// Reduce a p-integral rational polynomial modulo p.
Polynomial<ModP> reduce_polynomial(const PolyQ& f, long p);

}  // namespace igusa
