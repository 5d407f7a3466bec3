#include "igusa/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

struct Term {
  unsigned long long coefficient;
  int a, b;
};

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

unsigned long long mulmod(unsigned long long a, unsigned long long b, unsigned long long m) {
  return static_cast<unsigned long long>((static_cast<unsigned __int128>(a) * b) % m);
}

std::vector<long> dlog_table(long p) {
  std::vector<long> dlog(static_cast<std::size_t>(p), 0);
  long g = smallest_primitive_root(p);
  for (long k = 0, x = 1; k < p - 1; ++k, x = x * g % p) dlog[static_cast<std::size_t>(x)] = k;
  return dlog;
}

std::size_t histogram_size(long p, int m, std::size_t r) {
  std::size_t s = static_cast<std::size_t>(p * p);
  for (std::size_t j = 0; j < r; ++j) s *= static_cast<std::size_t>(m) * static_cast<std::size_t>(p - 1);
  return s;
}

}  // namespace

std::size_t OracleHistogram::index(const std::vector<int>& k, const std::vector<long>& dlogs, long x0, long y0) const {
  std::size_t i = 0;
  for (std::size_t j = 0; j < r; ++j) {
    i = i * static_cast<std::size_t>(modulus_exponent) + static_cast<std::size_t>(k[j]);
    i = i * static_cast<std::size_t>(p - 1) + static_cast<std::size_t>(dlogs[j]);
  }
  return (i * static_cast<std::size_t>(p) + static_cast<std::size_t>(x0)) * static_cast<std::size_t>(p) +
         static_cast<std::size_t>(y0);
}

OracleHistogram& OracleHistogram::operator+=(const OracleHistogram& o) {
  if (counts.empty()) return *this = o;
  if (o.p != p || o.modulus_exponent != modulus_exponent || o.r != r)
    throw std::invalid_argument("histograms of different shapes");
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
  return *this;
}

OracleHistogram enumerate_shard(const std::vector<PolyQ>& F, long p, int bound, const std::vector<long>& residues) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (F.empty()) throw std::invalid_argument("no polynomials");
  int m = bound + 1;
  long M = ipow(p, m);
  OracleHistogram h;
  h.p = p;
  h.modulus_exponent = m;
  h.r = F.size();
  h.counts.assign(histogram_size(p, m, h.r), 0);
  auto dlog = dlog_table(p);

  std::vector<std::vector<Term>> terms(F.size());
  int max_degree = 0;
  for (std::size_t j = 0; j < F.size(); ++j)
    for (const auto& [e, c] : F[j].terms()) {
      long long v;
      try {
        v = residue(c, M);
      } catch (const std::domain_error&) {
        throw BadPrime(p, "denominator: coefficient " + c.to_string() + " is not p-integral");
      }
      int a = e.at(0), b = e.size() > 1 ? e[1] : 0;
      max_degree = std::max({max_degree, a, b});
      if (v != 0) terms[j].push_back({static_cast<unsigned long long>(v), a, b});
    }

  const unsigned long long UM = static_cast<unsigned long long>(M);
  std::vector<unsigned long long> xp(static_cast<std::size_t>(max_degree) + 1), yp(xp.size());
  std::vector<int> k(F.size());
  std::vector<long> d(F.size());
  for (long x0 : residues)
    for (long x = x0; x < M; x += p) {
      xp[0] = 1 % UM;
      for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = mulmod(xp[i - 1], static_cast<unsigned long long>(x), UM);
      for (long y = 0; y < M; ++y) {
        yp[0] = 1 % UM;
        for (std::size_t i = 1; i < yp.size(); ++i) yp[i] = mulmod(yp[i - 1], static_cast<unsigned long long>(y), UM);
        bool inside = true;
        for (std::size_t j = 0; j < F.size() && inside; ++j) {
          unsigned long long v = 0;
          for (const auto& t : terms[j]) v = (v + mulmod(t.coefficient, mulmod(xp[t.a], yp[t.b], UM), UM)) % UM;
          if (v == 0) {
            inside = false;
            break;
          }
          int val = 0;
          while (v % p == 0) {
            v /= p;
            ++val;
          }
          k[j] = val;
          d[j] = dlog[v % p];
        }
        if (inside) ++h.counts[h.index(k, d, x0, y % p)];
      }
    }
  return h;
}

OracleHistogram enumerate_histogram(const std::vector<PolyQ>& F, long p, const OracleOptions& options) {
  if (options.bound < 0) throw std::invalid_argument("negative truncation bound");
  double needed = std::pow(static_cast<double>(p), 2.0 * (options.bound + 1));
  if (needed > options.budget) throw BudgetExceeded(needed, options.budget);
  unsigned shards = std::max(1u, options.shards);
  std::vector<std::vector<long>> plan(shards);
  for (long x0 = 0; x0 < p; ++x0) plan[static_cast<std::size_t>(x0) % shards].push_back(x0);

  std::vector<OracleHistogram> parts(shards);
  unsigned threads = std::max(1u, std::min(options.threads, shards));
  if (threads == 1) {
    for (unsigned s = 0; s < shards; ++s) parts[s] = enumerate_shard(F, p, options.bound, plan[s]);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (unsigned s = t; s < shards; s += threads) parts[s] = enumerate_shard(F, p, options.bound, plan[s]);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  OracleHistogram total;
  for (const auto& part : parts) total += part;
  return total;
}

CoefficientTable coefficient_table(const OracleHistogram& h, const CharacterTuple& chi, const ResidualFunction& phi,
                                   int bound) {
  if (chi.p != h.p || chi.exponents.size() != h.r) throw std::invalid_argument("character does not match histogram");
  if (bound >= h.modulus_exponent) throw std::invalid_argument("bound exceeds the enumeration modulus");
  if (phi.kind == ResidualFunction::Kind::Table && phi.p != h.p)
    throw std::invalid_argument("residual table is for another prime");
  const long p = h.p, m = h.modulus_exponent, c = p - 1;
  const std::size_t r = h.r;
  Rational scale = pow(Rational(p), -2 * m);

  std::map<Exponents, std::vector<Rational>> sums;
  std::vector<int> k(r);
  std::vector<long> d(r);
  // walk every k with |k| <= bound
  std::function<void(std::size_t, int)> walk = [&](std::size_t j, int left) {
    if (j == r) {
      std::vector<Rational> acc(static_cast<std::size_t>(c));
      std::vector<long> idx(r, 0);
      while (true) {
        long s = 0;
        for (std::size_t i = 0; i < r; ++i) s = (s + chi.exponents[i] * idx[i]) % c;
        for (long x0 = 0; x0 < p; ++x0)
          for (long y0 = 0; y0 < p; ++y0) {
            long long n = h.counts[h.index(k, idx, x0, y0)];
            if (n == 0) continue;
            Rational w = phi.value(x0, y0);
            if (!w.is_zero()) acc[static_cast<std::size_t>(s)] += w * Rational(static_cast<long>(n));
          }
        std::size_t i = r;
        while (i > 0) {
          if (++idx[i - 1] < c) break;
          idx[i - 1] = 0;
          --i;
        }
        if (i == 0) break;
      }
      for (auto& a : acc) a *= scale;
      sums.emplace(Exponents(k.begin(), k.end()), std::move(acc));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      k[j] = v;
      walk(j + 1, left - v);
    }
  };
  walk(0, bound);

  CoefficientTable t;
  t.p = p;
  t.chi = chi;
  t.phi = phi.tag();
  t.bound = bound;
  for (const auto& [e, acc] : sums)
    t.coefficients.emplace(e, CyclotomicNumber::from_exponent_counts(static_cast<unsigned>(c), acc));
  return t;
}

CoefficientTable enumerate_coefficients(const std::vector<PolyQ>& F, const CharacterTuple& chi,
                                        const ResidualFunction& phi, long p, const OracleOptions& options) {
  return coefficient_table(enumerate_histogram(F, p, options), chi, phi, options.bound);
}

namespace {

std::vector<Exponents> ordered_keys(const std::map<Exponents, CyclotomicNumber>& a,
                                    const std::map<Exponents, CyclotomicNumber>& b) {
  std::vector<Exponents> keys;
  for (const auto& [e, c] : a) keys.push_back(e);
  for (const auto& [e, c] : b)
    if (!a.count(e)) keys.push_back(e);
  std::sort(keys.begin(), keys.end(), [](const Exponents& x, const Exponents& y) {
    int dx = total_degree(x), dy = total_degree(y);
    return dx != dy ? dx < dy : x < y;
  });
  return keys;
}

}  // namespace

std::string CoefficientTable::to_text() const {
  std::ostringstream os;
  os << "p = " << p << ", chi = " << chi.to_string() << ", phi = " << phi << ", B = " << bound << "\n";
  for (const auto& k : ordered_keys(coefficients, {})) {
    os << "  k = (";
    for (std::size_t j = 0; j < k.size(); ++j) os << (j ? "," : "") << k[j];
    os << ") : " << coefficients.at(k).to_string() << "\n";
  }
  return os.str();
}

std::string CoefficientTable::to_json() const {
  nlohmann::json j;
  j["p"] = p;
  j["chi"] = chi.exponents;
  j["phi"] = phi;
  j["bound"] = bound;
  j["coefficients"] = nlohmann::json::array();
  for (const auto& k : ordered_keys(coefficients, {}))
    j["coefficients"].push_back({{"k", k}, {"value", coefficients.at(k).to_string()}});
  return j.dump(2) + "\n";
}

std::string Comparison::to_text() const {
  if (equal) return "equal\n";
  std::ostringstream os;
  os << "mismatch at k = (";
  for (std::size_t j = 0; j < k->size(); ++j) os << (j ? "," : "") << (*k)[j];
  os << "): closed form " << closed_form.to_string() << ", oracle " << oracle.to_string() << "\n";
  return os.str();
}

Comparison compare_with_closed_form(const ZetaFunction& Z, const CoefficientTable& table) {
  if (Z.p != table.p || !(Z.chi == table.chi) || Z.phi != table.phi)
    throw std::invalid_argument("closed form and table were computed for different data");
  auto lhs = taylor_coefficients(Z.fn, table.bound);
  Comparison out;
  for (const auto& k : ordered_keys(lhs, table.coefficients)) {
    auto a = lhs.count(k) ? lhs.at(k) : CyclotomicNumber(0);
    auto b = table.coefficients.count(k) ? table.coefficients.at(k) : CyclotomicNumber(0);
    if (!(a == b)) {
      out.equal = false;
      out.k = k;
      out.closed_form = a;
      out.oracle = b;
      return out;
    }
  }
  return out;
}

ZetaFunction monomial_zeta_reference(const std::vector<std::vector<int>>& exponents, long p) {
  if (exponents.empty()) throw std::invalid_argument("no variables");
  std::size_t r = exponents.front().size();
  ZetaFunction Z;
  Z.p = p;
  Z.chi = CharacterTuple::trivial(p, r);
  Z.phi = ResidualFunction::unit_ball().tag();
  std::map<DenominatorFactor, int> den;
  Rational c(1);
  for (const auto& row : exponents) {
    if (row.size() != r) throw std::invalid_argument("ragged exponent matrix");
    if (std::all_of(row.begin(), row.end(), [](int a) { return a == 0; }))
      throw std::invalid_argument("variable with no exponent");
    ++den[DenominatorFactor{1, row}];
    c *= Rational(1) - Rational(BigInt(1), BigInt(p));
  }
  Z.fn = RationalFunctionT(p, PolyC::constant(r, CyclotomicNumber(c)), std::move(den));
  return Z;
}

}  // namespace igusa
