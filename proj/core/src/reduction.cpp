#include "igusa/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "igusa/errors.hpp"

namespace igusa {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

long mulmod(long a, long b, long p) { return static_cast<long>((static_cast<__int128>(a) * b) % p); }

long powmod(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  for (; e > 0; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

long smallest_primitive_root(long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<long> primes;
  long n = p - 1;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) primes.push_back(n);
  for (long g = 2; g < p; ++g)
    if (std::all_of(primes.begin(), primes.end(), [&](long q) { return powmod(g, (p - 1) / q, p) != 1; }))
      return g;
  throw std::logic_error("no primitive root");
}

CharacterTuple CharacterTuple::make(long p, std::vector<long> exponents) {
  CharacterTuple c;
  c.p = p;
  c.generator = smallest_primitive_root(p);
  for (auto& e : exponents) e = mod(e, p - 1);
  c.exponents = std::move(exponents);
  return c;
}

std::vector<CharacterTuple> CharacterTuple::all(long p, std::size_t r) {
  std::vector<CharacterTuple> out;
  std::vector<long> e(r, 0);
  while (true) {
    out.push_back(make(p, e));
    std::size_t k = r;
    while (k > 0) {
      if (++e[k - 1] < p - 1) break;
      e[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

long CharacterTuple::order(std::size_t j) const {
  return (p - 1) / std::gcd(exponents.at(j), p - 1);
}

bool CharacterTuple::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](long e) { return e == 0; });
}

std::string CharacterTuple::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t j = 0; j < exponents.size(); ++j) os << (j ? "," : "") << exponents[j];
  os << ")";
  return os.str();
}

bool gamma_condition(const std::vector<int>& N, const CharacterTuple& chi) {
  if (N.size() != chi.exponents.size()) throw std::invalid_argument("gamma_condition: length mismatch");
  long m = chi.p - 1, s = 0;
  for (std::size_t j = 0; j < N.size(); ++j) s = mod(s + mod(N[j], m) * chi.exponents[j], m);
  return s == 0;
}

ResidualFunction ResidualFunction::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("residual table: ") + e.what());
  }
  auto rat = [](const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    throw ParseError("residual table: values must be integers or strings");
  };
  ResidualFunction f;
  f.kind = Kind::Table;
  try {
    f.p = j.at("p").get<long>();
    if (!is_prime(f.p)) throw ParseError("residual table: p is not prime");
    if (j.contains("default")) f.default_value = rat(j["default"]);
    for (const auto& e : j.at("values")) {
      long x = mod(e.at("x").get<long>(), f.p), y = mod(e.at("y").get<long>(), f.p);
      f.values[{x, y}] = rat(e.at("value"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("residual table: ") + e.what());
  }
  return f;
}

Rational ResidualFunction::value(long x, long y) const {
  switch (kind) {
    case Kind::UnitBall: return 1;
    case Kind::OriginClass: return (x == 0 && y == 0) ? 1 : 0;
    case Kind::Table: {
      auto it = values.find({x, y});
      return it == values.end() ? default_value : it->second;
    }
  }
  return 0;
}

std::string ResidualFunction::tag() const {
  switch (kind) {
    case Kind::UnitBall: return "unit-ball";
    case Kind::OriginClass: return "origin-class";
    case Kind::Table: return "table";
  }
  return "";
}

long ReducedPolynomial::evaluate(long u, long v, long p) const {
  long s = 0;
  for (const auto& [c, a, b] : terms) s = (s + mulmod(c, mulmod(powmod(u, a, p), powmod(v, b, p), p), p)) % p;
  return s;
}

bool ReducedPolynomial::is_constant() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return std::get<1>(t) == 0 && std::get<2>(t) == 0; });
}

namespace {

long reduce_rational(const Rational& x, long p, const std::string& what) {
  try {
    return static_cast<long>(residue(x, p));
  } catch (const std::domain_error&) {
    throw BadPrime(p, "denominator: " + what + " has coefficient " + x.to_string());
  }
}

ReducedPolynomial reduce_poly(const PolyQ& f, long p, const std::string& what) {
  ReducedPolynomial r;
  for (const auto& [e, c] : f.terms()) {
    long v = reduce_rational(c, p, what);
    if (v != 0) r.terms.emplace_back(v, e.at(0), e.size() > 1 ? e[1] : 0);
  }
  return r;
}

std::string chart_name(const Chart& c) { return "chart " + std::to_string(c.id); }

}  // namespace

bool ReducedGraph::owned(int chart, long u, long v) const {
  const Chart& c = graph.charts.at(static_cast<std::size_t>(chart));
  const ReducedChart& rc = charts.at(static_cast<std::size_t>(chart));
  switch (c.kind) {
    case ChartKind::Base: return true;
    case ChartKind::A: return owned(c.parent, (rc.center_u + u) % p, (rc.center_v + mulmod(u, v, p)) % p);
    case ChartKind::B:
      return u == 0 && owned(c.parent, (rc.center_u + mulmod(u, v, p)) % p, (rc.center_v + v) % p);
  }
  return false;
}

std::vector<int> ReducedGraph::divisors_at(int chart, long u, long v) const {
  const ReducedChart& rc = charts.at(static_cast<std::size_t>(chart));
  std::vector<int> I;
  for (std::size_t k = 0; k < rc.equations.size(); ++k)
    if (rc.equations[k].evaluate(u, v, p) == 0) I.push_back(rc.divisor_ids[k]);
  std::sort(I.begin(), I.end());
  return I;
}

namespace {

// Discrete logs of the units u_j at a chart point, nullopt entries when u_j vanishes.
std::vector<std::optional<long>> unit_dlogs(const ReducedGraph& rg, int chart, long u, long v) {
  const ReducedChart& rc = rg.charts.at(static_cast<std::size_t>(chart));
  std::vector<std::optional<long>> out;
  for (std::size_t j = 0; j < rg.graph.r; ++j) {
    long val = rc.unit_constants[j];
    for (std::size_t k = 0; k < rc.equations.size(); ++k) {
      long h = rc.equations[k].evaluate(u, v, rg.p);
      if (h == 0) continue;
      int n = rg.graph.divisor(rc.divisor_ids[k]).N[j];
      val = mulmod(val, powmod(h, n, rg.p), rg.p);
    }
    if (val == 0) out.push_back(std::nullopt);
    else out.push_back(rg.dlog[static_cast<std::size_t>(val)]);
  }
  return out;
}

void check_tameness(const ResolutionGraph& g, long p) {
  for (const auto& d : g.divisors)
    for (int n : d.N)
      if (n != 0 && n % p == 0)
        throw BadPrime(p, "tameness: " + std::to_string(p) + " divides N=" + std::to_string(n) + " of divisor " +
                              std::to_string(d.id));
}

}  // namespace

ReducedGraph reduce_mod_p(const ResolutionGraph& g, long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  ReducedGraph rg;
  rg.graph = g;
  rg.p = p;
  long gen = smallest_primitive_root(p);
  rg.dlog.assign(static_cast<std::size_t>(p), 0);
  for (long k = 0, x = 1; k < p - 1; ++k, x = mulmod(x, gen, p)) rg.dlog[static_cast<std::size_t>(x)] = k;

  for (std::size_t j = 0; j < g.polynomials.size(); ++j) reduce_poly(g.polynomials[j], p, "f" + std::to_string(j + 1));
  for (const auto& d : g.divisors) {
    if (d.nu < 1) throw BadPrime(p, "degenerate data: divisor " + std::to_string(d.id) + " has nu < 1");
    if (std::all_of(d.N.begin(), d.N.end(), [](int n) { return n == 0; }))
      throw BadPrime(p, "degenerate data: divisor " + std::to_string(d.id) + " has N = 0");
  }
  check_tameness(g, p);
  if (!g.has_charts()) return rg;

  for (const auto& c : g.charts) {
    ReducedChart rc;
    rc.id = c.id;
    std::string where = chart_name(c);
    if (c.kind != ChartKind::Base) {
      rc.center_u = reduce_rational(c.center.u, p, where + " center");
      rc.center_v = reduce_rational(c.center.v, p, where + " center");
    }
    rc.to_base_x = reduce_poly(c.to_base_x, p, where + " map");
    rc.to_base_y = reduce_poly(c.to_base_y, p, where + " map");
    for (const auto& cd : c.divisors) {
      std::string w = where + " equation of divisor " + std::to_string(cd.divisor);
      rc.divisor_ids.push_back(cd.divisor);
      rc.equations.push_back(reduce_poly(cd.equation, p, w));
      rc.d_u.push_back(reduce_poly(cd.equation.derivative(0), p, w));
      rc.d_v.push_back(reduce_poly(cd.equation.derivative(1), p, w));
      if (c.leaf && rc.equations.back().is_constant())
        throw BadPrime(p, "degenerate data: " + w + " is constant mod p");
    }
    for (std::size_t j = 0; j < c.unit_constants.size(); ++j) {
      long v = reduce_rational(c.unit_constants[j], p, where + " unit constant");
      if (c.leaf && v == 0) throw BadPrime(p, "degenerate data: " + where + " unit constant vanishes mod p");
      rc.unit_constants.push_back(v);
    }
    if (c.leaf && reduce_rational(c.jacobian_constant, p, where + " jacobian constant") == 0)
      throw BadPrime(p, "degenerate data: " + where + " jacobian constant vanishes mod p");
    rg.charts.push_back(std::move(rc));
  }

  std::map<std::pair<int, int>, long> pair_counts;
  std::map<int, long> on_divisor;
  for (const auto& c : g.charts) {
    if (!c.leaf) continue;
    const ReducedChart& rc = rg.charts[static_cast<std::size_t>(c.id)];
    for (long u = 0; u < p; ++u)
      for (long v = 0; v < p; ++v) {
        if (!rg.owned(c.id, u, v)) continue;
        std::vector<std::size_t> local;
        for (std::size_t k = 0; k < rc.equations.size(); ++k)
          if (rc.equations[k].evaluate(u, v, p) == 0) local.push_back(k);
        std::string at = chart_name(c) + " point (" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (local.size() > 2) throw BadPrime(p, "non-transverse reduction: three divisors meet at " + at);
        if (local.size() == 1) {
          std::size_t k = local[0];
          if (rc.d_u[k].evaluate(u, v, p) == 0 && rc.d_v[k].evaluate(u, v, p) == 0)
            throw BadPrime(p, "non-transverse reduction: divisor " + std::to_string(rc.divisor_ids[k]) +
                                  " is singular mod p at " + at);
        }
        if (local.size() == 2) {
          std::size_t a = local[0], b = local[1];
          long det = mod(mulmod(rc.d_u[a].evaluate(u, v, p), rc.d_v[b].evaluate(u, v, p), p) -
                             mulmod(rc.d_v[a].evaluate(u, v, p), rc.d_u[b].evaluate(u, v, p), p),
                         p);
          if (det == 0) throw BadPrime(p, "non-transverse reduction: tangency at " + at);
        }
        CensusKey key;
        for (auto k : local) key.I.push_back(rc.divisor_ids[k]);
        std::sort(key.I.begin(), key.I.end());
        key.base_x = rc.to_base_x.evaluate(u, v, p);
        key.base_y = rc.to_base_y.evaluate(u, v, p);
        for (const auto& d : unit_dlogs(rg, c.id, u, v)) {
          if (!d) throw UnitVanishes("unit vanishes mod " + std::to_string(p) + " at " + at);
          key.unit_dlogs.push_back(*d);
        }
        for (int i : key.I) ++on_divisor[i];
        if (key.I.size() == 2) ++pair_counts[{key.I[0], key.I[1]}];
        ++rg.census[key];
        ++rg.total_points;
      }
  }

  std::map<std::pair<int, int>, long> expected;
  for (const auto& ip : g.intersections) ++expected[{ip.first, ip.second}];
  if (expected != pair_counts)
    throw BadPrime(p, "non-distinct reduction: intersection points collide or appear mod p");
  for (const auto& d : g.divisors)
    if (d.kind == DivisorKind::Exceptional && on_divisor[d.id] != p + 1)
      throw BadPrime(p, "non-distinct reduction: exceptional divisor " + std::to_string(d.id) + " has " +
                            std::to_string(on_divisor[d.id]) + " points mod p");
  long blow_ups = static_cast<long>(g.exceptional_count());
  if (rg.total_points != p * p + blow_ups * p)
    throw BadPrime(p, "non-distinct reduction: chart point count " + std::to_string(rg.total_points) +
                          " differs from p^2 + " + std::to_string(blow_ups) + "p");
  return rg;
}

CyclotomicNumber omega_chi(const ReducedGraph& rg, int chart, long u, long v, const CharacterTuple& chi) {
  if (chi.p != rg.p) throw std::invalid_argument("omega_chi: character and graph primes differ");
  if (!rg.has_census()) throw std::invalid_argument("omega_chi: graph has no chart data");
  std::vector<int> I = rg.divisors_at(chart, mod(u, rg.p), mod(v, rg.p));
  for (int i : I)
    if (!gamma_condition(rg.graph.divisor(i).N, chi))
      throw std::invalid_argument("omega_chi: condition gamma fails for divisor " + std::to_string(i));
  long s = 0, m = rg.p - 1;
  auto logs = unit_dlogs(rg, chart, mod(u, rg.p), mod(v, rg.p));
  for (std::size_t j = 0; j < logs.size(); ++j) {
    if (!logs[j]) throw UnitVanishes("unit u_" + std::to_string(j + 1) + " vanishes at the point");
    s = mod(s + mulmod(chi.exponents[j], *logs[j], m), m);
  }
  return CyclotomicNumber::root_of_unity(static_cast<unsigned>(m), s);
}

CyclotomicNumber c_coefficient(const std::vector<int>& I_in, const CharacterTuple& chi, const ResidualFunction& phi,
                               const ReducedGraph& rg) {
  if (chi.p != rg.p) throw std::invalid_argument("c_coefficient: character and graph primes differ");
  if (!rg.has_census()) throw std::invalid_argument("c_coefficient: graph has no chart data");
  if (phi.kind == ResidualFunction::Kind::Table && phi.p != rg.p)
    throw std::invalid_argument("c_coefficient: residual table is for another prime");
  std::vector<int> I(I_in);
  std::sort(I.begin(), I.end());
  long m = rg.p - 1;
  std::vector<Rational> counts(static_cast<std::size_t>(m));
  for (const auto& [key, n] : rg.census) {
    if (key.I != I) continue;
    Rational w = phi.value(key.base_x, key.base_y);
    if (w.is_zero()) continue;
    long s = 0;
    for (std::size_t j = 0; j < key.unit_dlogs.size(); ++j) s = mod(s + mulmod(chi.exponents[j], key.unit_dlogs[j], m), m);
    counts[static_cast<std::size_t>(s)] += w * Rational(n);
  }
  return CyclotomicNumber::from_exponent_counts(static_cast<unsigned>(m), counts);
}

long count_stratum_points(const std::vector<int>& I_in, const ReducedGraph& rg) {
  std::vector<int> I(I_in);
  std::sort(I.begin(), I.end());
  long n = 0;
  for (const auto& [key, c] : rg.census)
    if (key.I == I) n += c;
  return n;
}

}  // namespace igusa
