#include "igusa/algebra/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

namespace igusa {

namespace {

// ---- polynomials over Z/p, p < 2^31, coefficients from degree 0 ----
using MPoly = std::vector<std::int64_t>;

struct Zp {
  std::int64_t p;

  std::int64_t norm(std::int64_t a) const { return ((a % p) + p) % p; }
  std::int64_t inv(std::int64_t a) const {
    std::int64_t r = 1, b = norm(a), e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  void trim(MPoly& f) const {
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  MPoly sub(MPoly a, const MPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = norm(a[i] - b[i]);
    trim(a);
    return a;
  }
  MPoly add(MPoly a, const MPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
    trim(a);
    return a;
  }
  MPoly mul(const MPoly& a, const MPoly& b) const {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    trim(r);
    return r;
  }
  MPoly scale(MPoly a, std::int64_t s) const {
    for (auto& c : a) c = c * norm(s) % p;
    trim(a);
    return a;
  }
  std::pair<MPoly, MPoly> divmod(MPoly a, const MPoly& b) const {
    int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {{}, a};
    MPoly q(a.size() - db, 0);
    std::int64_t li = inv(b.back());
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
      std::int64_t c = a[i] * li % p;
      q[i - db] = c;
      if (!c) continue;
      for (int k = 0; k <= db; ++k) a[i - db + k] = norm(a[i - db + k] - c * b[k]);
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
  }
  MPoly rem(const MPoly& a, const MPoly& b) const { return divmod(a, b).second; }
  MPoly monic(MPoly a) const { return a.empty() ? a : scale(a, inv(a.back())); }
  MPoly gcd(MPoly a, MPoly b) const {
    while (!b.empty()) {
      MPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s*a + t*b = 1 for coprime a, b
  std::pair<MPoly, MPoly> bezout(const MPoly& a, const MPoly& b) const {
    MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      MPoly s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    std::int64_t li = inv(r0.back());
    return {scale(s0, li), scale(t0, li)};
  }
  MPoly derivative(const MPoly& a) const {
    MPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<std::int64_t>(i % p) % p);
    trim(d);
    return d;
  }
  MPoly powmod(MPoly base, BigInt e, const MPoly& mod) const {
    MPoly r{1};
    base = rem(base, mod);
    while (e > 0) {
      if (mpz_odd_p(e.get_mpz_t())) r = rem(mul(r, base), mod);
      e >>= 1;
      if (e > 0) base = rem(mul(base, base), mod);
    }
    return r;
  }
};

MPoly reduce_z(const ZPoly& f, std::int64_t p) {
  MPoly r;
  BigInt pp = static_cast<long>(p);
  for (const auto& c : f) {
    BigInt v = c % pp;
    if (v < 0) v += pp;
    r.push_back(v.get_si());
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Equal-degree splitting (Cantor-Zassenhaus), p odd.
void split_equal_degree(const Zp& F, const MPoly& f, int d, std::mt19937_64& rng,
                        std::vector<MPoly>& out) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  BigInt e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::int64_t> dist(0, F.p - 1);
  for (;;) {
    MPoly a(n);
    for (auto& c : a) c = dist(rng);
    F.trim(a);
    if (a.size() < 2) continue;
    MPoly b = F.sub(F.powmod(a, e, f), MPoly{1});
    MPoly g = F.gcd(b, f);
    int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0 && dg < n) {
      split_equal_degree(F, g, d, rng, out);
      split_equal_degree(F, F.divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic square-free polynomial mod p.
std::vector<MPoly> factor_mod_p(const Zp& F, MPoly f) {
  std::vector<MPoly> out;
  std::mt19937_64 rng(0x5eed1234u);
  MPoly x{0, 1};
  MPoly h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = F.powmod(h, BigInt(static_cast<long>(F.p)), f);
    MPoly g = F.gcd(F.sub(h, x), f);
    if (g.size() > 1) {
      split_equal_degree(F, g, d, rng, out);
      f = F.divmod(f, g).first;
      h = F.rem(h, f);
    }
  }
  if (f.size() > 1) out.push_back(F.monic(f));
  return out;
}

// ---- integer polynomial helpers ----
void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

ZPoly zmod(ZPoly a, const BigInt& m, bool symmetric) {
  BigInt half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (symmetric && c > half) c -= m;
  }
  ztrim(a);
  return a;
}

// Exact division over Z; false if b does not divide a.
bool zdivides(ZPoly a, const ZPoly& b, ZPoly* quotient) {
  int db = static_cast<int>(b.size()) - 1;
  int da = static_cast<int>(a.size()) - 1;
  if (da < db) return false;
  ZPoly q(da - db + 1, BigInt(0));
  for (int i = da; i >= db; --i) {
    if (a[i] == 0) continue;
    if (a[i] % b.back() != 0) return false;
    BigInt c = a[i] / b.back();
    q[i - db] = c;
    for (int k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  for (const auto& c : a)
    if (c != 0) return false;
  if (quotient) {
    ztrim(q);
    *quotient = std::move(q);
  }
  return true;
}

ZPoly zprimitive(ZPoly a) {
  BigInt g = 0;
  for (const auto& c : a) g = gcd(g, c);
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

ZPoly lift_to_z(const MPoly& f) {
  ZPoly r;
  for (auto c : f) r.emplace_back(static_cast<long>(c));
  return r;
}

// Lift A = a*b mod p to mod p^k. lc(a) = lc(A) is kept, b stays monic.
void hensel_pair(const ZPoly& A, ZPoly& a, ZPoly& b, std::int64_t p, int k) {
  Zp F{p};
  MPoly am = reduce_z(a, p), bm = reduce_z(b, p);
  auto [s, t] = F.bezout(am, bm);
  (void)t;
  BigInt pj = static_cast<long>(p);
  BigInt pp = pj;
  for (int j = 1; j < k; ++j) {
    ZPoly ab = zmul(a, b);
    ZPoly e(std::max(A.size(), ab.size()), BigInt(0));
    for (std::size_t i = 0; i < A.size(); ++i) e[i] += A[i];
    for (std::size_t i = 0; i < ab.size(); ++i) e[i] -= ab[i];
    for (auto& c : e) c /= pj;  // exact modulo the earlier steps
    MPoly em = reduce_z(e, p);
    MPoly beta = F.rem(F.mul(em, s), bm);
    MPoly alpha = F.divmod(F.sub(em, F.mul(am, beta)), bm).first;
    ZPoly za = lift_to_z(alpha), zb = lift_to_z(beta);
    if (a.size() < za.size()) a.resize(za.size(), BigInt(0));
    if (b.size() < zb.size()) b.resize(zb.size(), BigInt(0));
    for (std::size_t i = 0; i < za.size(); ++i) a[i] += pj * za[i];
    for (std::size_t i = 0; i < zb.size(); ++i) b[i] += pj * zb[i];
    pj *= pp;
  }
}

// Lift the monic factors of A mod p to mod p^k (A may be given mod p^k).
std::vector<ZPoly> hensel_lift(const ZPoly& A, const std::vector<MPoly>& factors, std::int64_t p, int k,
                               const BigInt& modulus) {
  if (factors.size() == 1) {
    BigInt inv;
    BigInt lc = A.back() % modulus;
    if (lc < 0) lc += modulus;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t());
    ZPoly r = A;
    for (auto& c : r) c *= inv;
    return {zmod(r, modulus, false)};
  }
  Zp F{p};
  std::size_t half = factors.size() / 2;
  MPoly left{1}, right{1};
  for (std::size_t i = 0; i < half; ++i) left = F.mul(left, factors[i]);
  for (std::size_t i = half; i < factors.size(); ++i) right = F.mul(right, factors[i]);
  BigInt lc = A.back();
  ZPoly a = lift_to_z(F.scale(left, reduce_z(ZPoly{lc}, p).empty() ? 0 : reduce_z(ZPoly{lc}, p)[0]));
  a.back() = lc;  // keep the exact leading coefficient
  ZPoly b = lift_to_z(right);
  hensel_pair(A, a, b, p, k);
  a = zmod(a, modulus, true);
  b = zmod(b, modulus, true);
  std::vector<MPoly> lf(factors.begin(), factors.begin() + half), rf(factors.begin() + half, factors.end());
  auto la = hensel_lift(a, lf, p, k, modulus);
  auto lb = hensel_lift(b, rf, p, k, modulus);
  la.insert(la.end(), lb.begin(), lb.end());
  return la;
}

std::vector<std::int64_t> small_primes() {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 3; out.size() < 200; n += 2) {
    bool prime = true;
    for (std::int64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) prime = false;
    if (prime) out.push_back(n);
  }
  return out;
}

// Irreducible factors of a primitive square-free A with positive lc.
std::vector<ZPoly> zassenhaus(ZPoly A) {
  int n = static_cast<int>(A.size()) - 1;
  if (n <= 1) return {A};
  std::int64_t p = 0;
  std::vector<MPoly> modular;
  for (std::int64_t q : small_primes()) {
    Zp F{q};
    MPoly am = reduce_z(A, q);
    if (static_cast<int>(am.size()) - 1 != n) continue;
    if (F.gcd(am, F.derivative(am)).size() != 1) continue;
    p = q;
    modular = factor_mod_p(F, F.monic(am));
    break;
  }
  if (!p) throw std::runtime_error("no suitable prime for factorization");
  if (modular.size() == 1) return {A};

  BigInt maxc = 0;
  for (const auto& c : A) maxc = std::max(maxc, BigInt(abs(c)));
  BigInt norm2 = maxc * maxc * (n + 1);
  BigInt bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;
  bound <<= n;
  bound *= 2 * A.back();
  int k = 1;
  BigInt modulus = static_cast<long>(p);
  while (modulus <= bound) {
    modulus *= p;
    ++k;
  }
  std::vector<ZPoly> lifted = hensel_lift(A, modular, p, k, modulus);

  std::vector<ZPoly> found;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand{A.back()};
      for (auto i : idx) cand = zmod(zmul(cand, lifted[i]), modulus, false);
      cand = zprimitive(zmod(cand, modulus, true));
      ZPoly q;
      if (cand.size() > 1 && zdivides(A, cand, &q)) {
        found.push_back(cand);
        A = q;
        for (std::size_t i = s; i-- > 0;) lifted.erase(lifted.begin() + idx[i]);
        hit = true;
        break;
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && idx[i - 1] == lifted.size() - s + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (A.size() > 1) found.push_back(zprimitive(A));
  return found;
}

bool upoly_less(const UPolyQ& a, const UPolyQ& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

UnivariateFactorization factor(const UPolyQ& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  UnivariateFactorization out{f.leading(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& z : zassenhaus(primitive_integer_part(part))) {
      UPolyQ g = to_rational_poly(z);
      out.factors.emplace_back(g, mult);
    }
  }
  // unit = f / prod factors^mult
  UPolyQ prod = UPolyQ::constant(1);
  for (const auto& [g, m] : out.factors)
    for (int i = 0; i < m; ++i) prod = prod * g;
  out.unit = f.leading() / prod.leading();
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return upoly_less(a.first, b.first); });
  return out;
}

PolyQ primitive_part(const PolyQ& f, Rational* content) {
  if (f.is_zero()) {
    if (content) *content = Rational(0);
    return f;
  }
  BigInt l = 1, g = 0;
  for (const auto& [e, c] : f.terms()) l = lcm(l, c.denominator());
  for (const auto& [e, c] : f.terms()) g = gcd(g, c.numerator() * (l / c.denominator()));
  if (f.leading_coefficient().sign() < 0) g = -g;
  Rational cont(g, l);
  if (content) *content = cont;
  return f * cont.inverse();
}

namespace {

// Kronecker map for two variables: x -> t, y -> t^D.
UPolyQ kronecker(const PolyQ& f, int D) {
  std::vector<Rational> c;
  for (const auto& [e, coef] : f.terms()) {
    std::size_t k = static_cast<std::size_t>(e[0] + D * e[1]);
    if (c.size() <= k) c.resize(k + 1);
    c[k] += coef;
  }
  return UPolyQ(std::move(c));
}

PolyQ inverse_kronecker(const UPolyQ& g, int D) {
  PolyQ r(2);
  for (int k = 0; k <= g.degree(); ++k) r.add_term({k % D, k / D}, g[k]);
  return r;
}

std::vector<std::pair<PolyQ, int>> factor_bivariate_primitive(PolyQ F) {
  std::vector<std::pair<PolyQ, int>> out;
  auto record = [&](const PolyQ& g) {
    for (auto& [h, m] : out)
      if (h == g) {
        ++m;
        return;
      }
    out.emplace_back(g, 1);
  };
  // monomial content first
  for (std::size_t v = 0; v < 2; ++v) {
    int m = -1;
    for (const auto& [e, c] : F.terms()) m = (m < 0 || e[v] < m) ? e[v] : m;
    if (m > 0) {
      PolyQ var = PolyQ::variable(2, v);
      for (int i = 0; i < m; ++i) {
        F = exact_div(F, var);
        record(var);
      }
    }
  }
  while (F.total_degree() > 0) {
    int D = F.degree_in(0) + 1;
    UnivariateFactorization uf = factor(kronecker(F, D));
    std::vector<UPolyQ> base;
    std::vector<int> mult;
    for (const auto& [g, m] : uf.factors) {
      base.push_back(g);
      mult.push_back(m);
    }
    // enumerate sub-multisets ordered by degree; the smallest divisor is irreducible
    std::vector<std::pair<int, std::vector<int>>> choices;
    std::vector<int> cur(base.size(), 0);
    for (;;) {
      std::size_t i = 0;
      while (i < cur.size() && cur[i] == mult[i]) cur[i++] = 0;
      if (i == cur.size()) break;
      ++cur[i];
      int deg = 0;
      for (std::size_t j = 0; j < cur.size(); ++j) deg += cur[j] * base[j].degree();
      choices.emplace_back(deg, cur);
      if (choices.size() > 200000) throw std::runtime_error("bivariate factorization too large");
    }
    std::stable_sort(choices.begin(), choices.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    bool hit = false;
    for (const auto& [deg, sel] : choices) {
      UPolyQ prod = UPolyQ::constant(1);
      for (std::size_t j = 0; j < sel.size(); ++j)
        for (int k = 0; k < sel[j]; ++k) prod = prod * base[j];
      PolyQ cand = primitive_part(inverse_kronecker(prod, D));
      if (cand.total_degree() < 1) continue;
      auto res = divide(F, cand);
      if (!res.remainder.is_zero()) continue;
      record(cand);
      F = res.quotient;
      hit = true;
      break;
    }
    if (!hit) {
      record(primitive_part(F));
      break;
    }
  }
  return out;
}

}  // namespace

MultivariateFactorization factor(const PolyQ& f) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  MultivariateFactorization out;
  if (f.nvars() == 1) {
    auto uf = factor(to_univariate(f, 0));
    out.unit = uf.unit;
    for (const auto& [g, m] : uf.factors) out.factors.emplace_back(from_univariate(g, 1, 0), m);
    return out;
  }
  if (f.nvars() != 2) throw std::invalid_argument("factorization supports one or two variables");
  Rational content;
  PolyQ F = primitive_part(f, &content);
  out.factors = factor_bivariate_primitive(F);
  PolyQ prod = PolyQ::constant(2, Rational(1));
  for (const auto& [g, m] : out.factors) prod *= pow(g, static_cast<unsigned>(m));
  out.unit = f.leading_coefficient() / prod.leading_coefficient();
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.total_degree() != b.first.total_degree())
      return a.first.total_degree() < b.first.total_degree();
    return a.first.to_string() < b.first.to_string();
  });
  return out;
}

}  // namespace igusa
