#include "igusa/zeta.hpp"

#include <numeric>
#include <sstream>

#include <json.hpp>

#include "igusa/errors.hpp"

namespace igusa {

Hyperplane Hyperplane::normalized(const std::vector<int>& N, long nu) {
  long g = std::abs(nu);
  for (int n : N) g = std::gcd(g, static_cast<long>(std::abs(n)));
  if (g == 0) throw std::invalid_argument("hyperplane with zero data");
  Hyperplane h;
  for (int n : N) h.N.push_back(static_cast<int>(n / g));
  h.nu = nu / g;
  return h;
}

std::string Hyperplane::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < N.size(); ++j) {
    if (N[j] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (N[j] != 1) os << N[j];
    os << "s";
    if (N.size() > 1) os << (j + 1);
  }
  os << (nu < 0 ? "-" : "+") << std::abs(nu);
  return os.str();
}

ZetaFunction denef_zeta(const ReducedGraph& rg, const CharacterTuple& chi, const ResidualFunction& phi) {
  if (!rg.has_census()) throw std::invalid_argument("denef_zeta: graph has no chart data");
  const ResolutionGraph& g = rg.graph;
  std::size_t r = g.r;
  if (chi.exponents.size() != r) throw std::invalid_argument("denef_zeta: character tuple has wrong length");
  long q = rg.p;

  std::set<std::vector<int>> strata{{}};
  for (const auto& [key, n] : rg.census) strata.insert(key.I);

  ZetaFunction Z;
  Z.fn = RationalFunctionT(q, r);
  Z.p = q;
  Z.chi = chi;
  Z.phi = phi.tag();
  Rational scale = pow(Rational(q), -2);
  for (const auto& I : strata) {
    bool ok = true;
    for (int i : I) ok = ok && gamma_condition(g.divisor(i).N, chi);
    if (!ok) continue;
    CyclotomicNumber c = c_coefficient(I, chi, phi, rg);
    if (c.is_zero()) continue;
    ZetaTerm term{I, c, {}};
    PolyC num = PolyC::constant(r, c * CyclotomicNumber(scale));
    std::map<DenominatorFactor, int> den;
    for (int i : I) {
      const Divisor& d = g.divisor(i);
      DenominatorFactor f{d.nu, d.N};
      term.factors.push_back(f);
      ++den[f];
      num *= PolyC::monomial(Exponents(d.N.begin(), d.N.end()),
                             CyclotomicNumber(Rational(q - 1) * pow(Rational(q), -d.nu)));
    }
    Z.fn += RationalFunctionT(q, std::move(num), std::move(den));
    Z.terms.push_back(std::move(term));
  }
  return Z;
}

std::set<Hyperplane> candidate_poles(const ResolutionGraph& g, const std::optional<CharacterTuple>& chi) {
  std::set<Hyperplane> out;
  for (const auto& d : g.divisors)
    if (!chi || gamma_condition(d.N, *chi)) out.insert(Hyperplane::normalized(d.N, d.nu));
  return out;
}

std::set<Hyperplane> actual_polar_hyperplanes(const RationalFunctionT& Z) {
  // Factors on different hyperplanes are coprime, so H is polar exactly when
  // the numerator is not divisible by the product of the factors on H.
  std::map<Hyperplane, std::vector<std::pair<DenominatorFactor, int>>> groups;
  for (const auto& [f, m] : Z.denominator()) groups[Hyperplane::normalized(f.N, f.nu)].push_back({f, m});
  std::set<Hyperplane> out;
  for (const auto& [H, factors] : groups) {
    PolyC rest = Z.numerator();
    bool divisible = true;
    for (const auto& [f, m] : factors)
      for (int k = 0; k < m && divisible; ++k) {
        auto quotient = binomial_divide(rest, to_cyclotomic(f.polynomial(Z.q())));
        if (!quotient) divisible = false;
        else rest = std::move(*quotient);
      }
    if (!divisible) out.insert(H);
  }
  return out;
}

std::set<Hyperplane> unmask_filter(const ResolutionGraph& g, const std::set<Hyperplane>& candidates) {
  std::set<Hyperplane> out;
  for (const auto& H : candidates)
    for (const auto& d : g.divisors) {
      bool eligible = d.kind == DivisorKind::Strict || g.intersection_count(d.id) >= 3;
      if (eligible && Hyperplane::normalized(d.N, d.nu) == H) {
        out.insert(H);
        break;
      }
    }
  return out;
}

CyclotomicNumber degree_limit(const ZetaFunction& Z) {
  long q = Z.p;
  CyclotomicNumber sum;
  for (const auto& term : Z.terms) {
    for (const auto& f : term.factors)
      if (std::all_of(f.N.begin(), f.N.end(), [](int n) { return n == 0; }))
        throw DivergentLimit("factor with N = 0 has no limit as s -> -infinity");
    sum += term.c * CyclotomicNumber(pow(Rational(1 - q), static_cast<long>(term.I.size())));
  }
  return sum * CyclotomicNumber(pow(Rational(q), -2));
}

CyclotomicNumber ray_limit(const RationalFunctionT& Z) {
  std::map<int, CyclotomicNumber> num;
  for (const auto& [e, c] : Z.numerator().terms()) num[total_degree(e)] += c;
  int num_degree = -1;
  for (const auto& [d, c] : num)
    if (!c.is_zero()) num_degree = d;
  if (num_degree < 0) return CyclotomicNumber(0);
  int den_degree = 0;
  Rational den_lead(1);
  for (const auto& [f, m] : Z.denominator()) {
    int step = std::accumulate(f.N.begin(), f.N.end(), 0);
    if (step == 0) throw DivergentLimit("factor with N = 0 has no limit along the ray");
    den_degree += step * m;
    den_lead *= pow(-pow(Rational(Z.q()), -f.nu), m);
  }
  if (num_degree > den_degree) throw DivergentLimit("rational function is unbounded along the ray");
  if (num_degree < den_degree) return CyclotomicNumber(0);
  return num[num_degree] * CyclotomicNumber(den_lead.inverse());
}

bool holomorphy_test(const ZetaFunction& Z) { return actual_polar_hyperplanes(Z).empty(); }

namespace {

std::string monomial_string(const Exponents& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "t";
    if (e.size() > 1) os << (j + 1);
    if (e[j] > 1) os << "^" << e[j];
  }
  return first ? "1" : os.str();
}

}  // namespace

std::string zeta_to_text(const ZetaFunction& Z) {
  std::ostringstream os;
  os << "q = " << Z.p << "\n";
  os << "chi = " << Z.chi.to_string() << "  (generator " << Z.chi.generator << ", z = exp(2 pi i/" << (Z.p - 1)
     << "))\n";
  os << "phi = " << Z.phi << "\n";
  os << "terms:\n";
  for (const auto& t : Z.terms) {
    os << "  I = {";
    for (std::size_t k = 0; k < t.I.size(); ++k) os << (k ? "," : "") << t.I[k];
    os << "}  c = " << t.c.to_string() << "\n";
  }
  os << "numerator:\n";
  if (Z.fn.numerator().is_zero()) os << "  0\n";
  for (const auto& [e, c] : Z.fn.numerator().terms()) os << "  " << monomial_string(e) << " : " << c.to_string() << "\n";
  os << "denominator:\n";
  for (const auto& [f, m] : Z.fn.denominator()) {
    os << "  " << f.to_string();
    if (m > 1) os << "^" << m;
    os << "\n";
  }
  return os.str();
}

std::string zeta_to_json(const ZetaFunction& Z) {
  nlohmann::json j;
  j["q"] = Z.p;
  j["chi"] = Z.chi.exponents;
  j["generator"] = Z.chi.generator;
  j["phi"] = Z.phi;
  j["terms"] = nlohmann::json::array();
  for (const auto& t : Z.terms) j["terms"].push_back({{"I", t.I}, {"c", t.c.to_string()}});
  j["numerator"] = nlohmann::json::array();
  for (const auto& [e, c] : Z.fn.numerator().terms())
    j["numerator"].push_back({{"exponents", e}, {"coefficient", c.to_string()}});
  j["denominator"] = nlohmann::json::array();
  for (const auto& [f, m] : Z.fn.denominator())
    j["denominator"].push_back({{"nu", f.nu}, {"N", f.N}, {"multiplicity", m}});
  return j.dump(2) + "\n";
}

}  // namespace igusa
