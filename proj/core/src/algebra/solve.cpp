#include "igusa/algebra/solve.hpp"

#include <algorithm>

#include "igusa/algebra/factor.hpp"

namespace igusa {

namespace {

// Polynomial in `var` with coefficients univariate in the other variable.
std::vector<UPolyQ> coefficients_in(const PolyQ& f, std::size_t var) {
  std::size_t other = 1 - var;
  std::vector<std::vector<Rational>> c(std::max(f.degree_in(var), 0) + 1);
  for (const auto& [e, coef] : f.terms()) {
    auto& row = c[e[var]];
    if (row.size() <= static_cast<std::size_t>(e[other])) row.resize(e[other] + 1);
    row[e[other]] += coef;
  }
  std::vector<UPolyQ> out;
  for (auto& row : c) out.emplace_back(std::move(row));
  return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Rational inv = m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Rational factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

// Newton interpolation through (xs[i], ys[i]).
UPolyQ interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  std::size_t n = xs.size();
  std::vector<Rational> coef = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
  UPolyQ r;
  for (std::size_t i = n; i-- > 0;) r = r * UPolyQ({-xs[i], Rational(1)}) + UPolyQ::constant(coef[i]);
  return r;
}

// ---- arithmetic in Q[u]/(h) for irreducible h ----
struct NumberField {
  UPolyQ h;
  UPolyQ reduce(const UPolyQ& a) const { return divmod(a, h).second; }
  UPolyQ mul(const UPolyQ& a, const UPolyQ& b) const { return reduce(a * b); }
  UPolyQ inv(const UPolyQ& a) const { return extended_gcd(a, h).s; }
};

using NFPoly = std::vector<UPolyQ>;  // coefficients in the field, degree 0 upward

void nf_trim(NFPoly& f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
}

NFPoly nf_rem(const NumberField& K, NFPoly a, const NFPoly& b) {
  int db = static_cast<int>(b.size()) - 1;
  UPolyQ li = K.inv(b.back());
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    UPolyQ c = K.mul(a.back(), li);
    for (int k = 0; k <= db; ++k) a[da - db + k] = K.reduce(a[da - db + k] - c * b[k]);
    a.pop_back();
    nf_trim(a);
  }
  return a;
}

NFPoly nf_gcd(const NumberField& K, NFPoly a, NFPoly b) {
  nf_trim(a);
  nf_trim(b);
  while (!b.empty()) {
    NFPoly r = nf_rem(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f(alpha, v) with alpha a root of K.h, as a polynomial in v (var 1).
NFPoly specialize(const NumberField& K, const PolyQ& f, std::size_t var) {
  NFPoly out;
  for (const auto& c : coefficients_in(f, var)) out.push_back(K.reduce(c));
  nf_trim(out);
  return out;
}

}  // namespace

UPolyQ resultant(const PolyQ& f, const PolyQ& g, std::size_t var) {
  std::size_t other = 1 - var;
  auto fc = coefficients_in(f, var), gc = coefficients_in(g, var);
  int m = f.degree_in(var), n = g.degree_in(var);
  if (m < 0 || n < 0) return UPolyQ();
  int bound = m * std::max(g.degree_in(other), 0) + n * std::max(f.degree_in(other), 0);
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= bound; ++k) {
    Rational a(k);
    std::size_t size = static_cast<std::size_t>(m + n);
    if (size == 0) {
      xs.push_back(a);
      ys.push_back(Rational(1));
      continue;
    }
    std::vector<std::vector<Rational>> syl(size, std::vector<Rational>(size));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= m; ++j) syl[i][i + j] = fc[m - j].evaluate(a);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= n; ++j) syl[n + i][i + j] = gc[n - j].evaluate(a);
    xs.push_back(a);
    ys.push_back(determinant(std::move(syl)));
  }
  return interpolate(xs, ys);
}

std::vector<Rational> rational_roots(const UPolyQ& f) {
  std::vector<Rational> roots;
  if (f.degree() < 1) return roots;
  for (const auto& [g, m] : factor(f).factors)
    if (g.degree() == 1) roots.push_back(-g[0] / g[1]);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<RationalPoint> rational_common_zeros(std::span<const PolyQ> system) {
  std::vector<PolyQ> polys;
  for (const auto& p : system) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return {};
    polys.push_back(p);
  }
  if (polys.size() < 2) throw std::invalid_argument("system is not zero-dimensional");

  // eliminate v (variable 1) with a pair whose resultant is nonzero
  UPolyQ res;
  for (std::size_t i = 0; i < polys.size() && res.is_zero(); ++i)
    for (std::size_t j = i + 1; j < polys.size() && res.is_zero(); ++j) {
      if (polys[i].degree_in(1) == 0 && polys[j].degree_in(1) == 0) {
        UPolyQ g = gcd(to_univariate(polys[i], 0), to_univariate(polys[j], 0));
        if (g.degree() == 0) return {};
        continue;
      }
      res = resultant(polys[i], polys[j], 1);
    }
  if (res.is_zero()) throw std::invalid_argument("system is not zero-dimensional");
  if (res.degree() < 1) return {};

  std::vector<RationalPoint> out;
  for (const auto& [h, mult] : factor(res).factors) {
    NumberField K{h};
    NFPoly g;
    for (const auto& p : polys) g = nf_gcd(K, g, specialize(K, p, 1));
    if (g.size() < 2) continue;  // no common root over this u
    if (h.degree() > 1) throw IrrationalSolution(h.monic(), 0);
    Rational alpha = -h[0] / h[1];
    std::vector<Rational> vc;
    for (const auto& c : g) vc.push_back(c[0]);
    UPolyQ gv(std::move(vc));
    for (const auto& [k, m] : factor(gv).factors) {
      if (k.degree() > 1) throw IrrationalSolution(k.monic(), 1);
      out.push_back({alpha, -k[0] / k[1]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace igusa
