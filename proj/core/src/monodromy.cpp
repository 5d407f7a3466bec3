#include "igusa/monodromy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace igusa {

namespace {

Rational frac(const Rational& x) {
  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  return x - Rational(fl);
}

long content_of(const std::vector<int>& N) {
  long g = 0;
  for (int n : N) g = std::gcd(g, static_cast<long>(std::abs(n)));
  return g;
}

std::vector<int> primitive(const std::vector<int>& N) {
  long g = content_of(N);
  std::vector<int> out(N);
  if (g > 1)
    for (auto& n : out) n = static_cast<int>(n / g);
  return out;
}

std::string vec_string(const std::vector<int>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string point_string(const RationalPoint& p) { return "(" + p.u.to_string() + "," + p.v.to_string() + ")"; }

std::string power_string(const std::vector<int>& N) {
  if (N.size() == 1) return "t^" + std::to_string(N[0]);
  std::string s;
  for (std::size_t j = 0; j < N.size(); ++j) {
    if (N[j] == 0) continue;
    if (!s.empty()) s += "*";
    s += "t" + std::to_string(j + 1) + "^" + std::to_string(N[j]);
  }
  return s;
}

}  // namespace

std::vector<MonodromyBasePoint> monodromy_base_points(const ResolutionGraph& g) {
  std::vector<MonodromyBasePoint> out;
  for (const auto& d : g.divisors)
    if (d.kind == DivisorKind::Strict)
      out.push_back({MonodromyBasePoint::Kind::Smooth, "generic point of E" + std::to_string(d.id), std::nullopt, {d.id}});

  std::vector<MonodromyBasePoint> crossings;
  for (const auto& ip : g.intersections) {
    if (g.divisor(ip.first).kind != DivisorKind::Strict || g.divisor(ip.second).kind != DivisorKind::Strict) continue;
    auto it = std::find_if(crossings.begin(), crossings.end(), [&](const MonodromyBasePoint& b) {
      if (ip.base && b.point) return *b.point == *ip.base;
      return !ip.base && !b.point && b.divisors == std::vector<int>{ip.first, ip.second};
    });
    if (it == crossings.end()) {
      MonodromyBasePoint b{MonodromyBasePoint::Kind::Crossing, "", ip.base, {}};
      b.description = ip.base ? "crossing at " + point_string(*ip.base)
                              : "crossing of E" + std::to_string(ip.first) + " and E" + std::to_string(ip.second);
      crossings.push_back(b);
      it = crossings.end() - 1;
    }
    for (int d : {ip.first, ip.second})
      if (std::find(it->divisors.begin(), it->divisors.end(), d) == it->divisors.end()) it->divisors.push_back(d);
    std::sort(it->divisors.begin(), it->divisors.end());
  }
  out.insert(out.end(), crossings.begin(), crossings.end());

  for (std::size_t k = 0; k < g.lineage.size(); ++k)
    out.push_back({MonodromyBasePoint::Kind::Blown, "blown-up point " + point_string(g.lineage[k].point),
                   g.lineage[k].point, g.lineage[k].divisors});
  MonodromyBasePoint orphan{MonodromyBasePoint::Kind::Blown, "blown-up point (unspecified)", std::nullopt, {}};
  for (const auto& d : g.divisors)
    if (d.kind == DivisorKind::Exceptional && !d.base_point) orphan.divisors.push_back(d.id);
  if (!orphan.divisors.empty()) out.push_back(orphan);
  return out;
}

std::string MonodromyZeta::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [N, e] : factors) {
    if (!s.empty()) s += " * ";
    s += "(" + power_string(N) + " - 1)^" + std::to_string(e);
  }
  return s;
}

MonodromyZeta sabbah_zeta(const ResolutionGraph& g, const MonodromyBasePoint& xi) {
  std::map<std::vector<int>, long> acc;
  for (int i : xi.divisors) {
    long chi = 0;
    switch (xi.kind) {
      case MonodromyBasePoint::Kind::Blown: chi = g.euler_characteristic(i); break;
      case MonodromyBasePoint::Kind::Crossing: chi = 1 - static_cast<long>(xi.divisors.size() - 1); break;
      case MonodromyBasePoint::Kind::Smooth: chi = 1; break;
    }
    acc[g.divisor(i).N] -= chi;
  }
  MonodromyZeta z;
  z.base = xi.description;
  for (const auto& [N, e] : acc)
    if (e != 0) z.factors.emplace_back(N, e);
  return z;
}

FiniteOrderCharacter FiniteOrderCharacter::make(std::vector<Rational> a) {
  for (auto& x : a) x = frac(x);
  return {std::move(a)};
}

FiniteOrderCharacter FiniteOrderCharacter::from(const CharacterTuple& chi) {
  std::vector<Rational> a;
  for (long e : chi.exponents) a.emplace_back(BigInt(e), BigInt(chi.p - 1));
  return make(std::move(a));
}

BigInt FiniteOrderCharacter::order() const {
  BigInt l = 1;
  for (const auto& x : a) l = lcm(l, x.denominator());
  return l;
}

std::string FiniteOrderCharacter::to_string() const {
  std::string s = "(";
  for (std::size_t j = 0; j < a.size(); ++j) s += (j ? "," : "") + a[j].to_string();
  return s + ")";
}

TranslatedCotorus TranslatedCotorus::make(std::vector<int> N, Rational tau) {
  if (content_of(N) != 1) throw std::invalid_argument("cotorus direction must be primitive");
  return {std::move(N), frac(tau)};
}

bool TranslatedCotorus::contains(const FiniteOrderCharacter& phi) const {
  if (phi.a.size() != N.size()) throw std::invalid_argument("cotorus membership: length mismatch");
  Rational s = -tau;
  for (std::size_t j = 0; j < N.size(); ++j) s += Rational(N[j]) * phi.a[j];
  return s.is_integer();
}

std::string TranslatedCotorus::to_string() const {
  return "{phi^" + vec_string(N) + " = exp(2 pi i * " + tau.to_string() + ")}";
}

bool HyperplaneCotori::contains(const FiniteOrderCharacter& phi) const {
  Rational s = -residue;
  for (std::size_t j = 0; j < N.size(); ++j) s += Rational(N[j]) * phi.a.at(j);
  return (s / Rational(content)).is_integer();
}

std::vector<TranslatedCotorus> HyperplaneCotori::components() const {
  return {TranslatedCotorus::make(primitive(N), residue / Rational(content))};
}

HyperplaneCotori hyperplane_cotori(const Hyperplane& H) {
  HyperplaneCotori c;
  c.N = H.N;
  c.content = content_of(H.N);
  if (c.content == 0) throw std::invalid_argument("hyperplane with N = 0");
  c.residue = Rational(((-H.nu) % c.content + c.content) % c.content);
  return c;
}

std::vector<TranslatedCotorus> cotorus_closure(const TranslatedCotorus& Z) {
  std::set<TranslatedCotorus> out;
  long n = Z.tau.denominator().get_si();
  for (long i = 1; i <= n; ++i) out.insert(TranslatedCotorus::make(Z.N, Rational(i) * Z.tau));
  return {out.begin(), out.end()};
}

std::vector<TranslatedCotorus> cotorus_closure(const std::vector<TranslatedCotorus>& Z) {
  std::set<TranslatedCotorus> out;
  for (const auto& z : Z)
    for (auto& c : cotorus_closure(z)) out.insert(c);
  return {out.begin(), out.end()};
}

std::vector<int> support_divisors(const ResolutionGraph& g, const MonodromyBasePoint& xi) {
  std::set<int> out(xi.divisors.begin(), xi.divisors.end());
  if (xi.kind == MonodromyBasePoint::Kind::Blown)
    for (int i : xi.divisors)
      for (int t : g.neighbours(i))
        if (g.divisor(t).kind == DivisorKind::Strict) out.insert(t);
  return {out.begin(), out.end()};
}

std::set<TranslatedCotorus> alexander_support_bound(const ResolutionGraph& g, const MonodromyBasePoint& xi) {
  std::set<TranslatedCotorus> out;
  for (int i : support_divisors(g, xi)) {
    const auto& N = g.divisor(i).N;
    long c = content_of(N);
    for (long k = 0; k < c; ++k) out.insert(TranslatedCotorus::make(primitive(N), Rational(BigInt(k), BigInt(c))));
  }
  return out;
}

long net_exponent(const MonodromyZeta& zeta, const TranslatedCotorus& Z) {
  long e = 0;
  for (const auto& [N, m] : zeta.factors)
    if (primitive(N) == Z.N && (Rational(content_of(N)) * Z.tau).is_integer()) e += m;
  return e;
}

std::vector<CotorusCertificate> support_certificate(const ResolutionGraph& g, const MonodromyBasePoint& xi) {
  MonodromyZeta zeta = sabbah_zeta(g, xi);
  std::set<TranslatedCotorus> touched;
  for (const auto& [N, m] : zeta.factors) {
    long c = content_of(N);
    for (long k = 0; k < c; ++k) touched.insert(TranslatedCotorus::make(primitive(N), Rational(BigInt(k), BigInt(c))));
  }
  std::vector<CotorusCertificate> out;
  for (const auto& Z : touched)
    if (long e = net_exponent(zeta, Z); e != 0) out.push_back({Z, e});
  return out;
}

StalkData local_stalk_data(const IntegerMatrix& N, long p) {
  StalkData s;
  s.components_through = N.cols();
  SmithForm sf = smith_normal_form(N);
  s.lattice_rank = N.cols() - sf.rank;
  s.gcd_product = 1;
  for (std::size_t c = 0; c < N.cols(); ++c) {
    BigInt g = 0;
    for (std::size_t r = 0; r < N.rows(); ++r) g = gcd(g, N(r, c));
    s.gcd_product *= g;
  }
  if (sf.rank < N.rows()) return s;
  BigInt count = 1;
  for (const auto& d : sf.invariant_factors) count *= abs(d);
  s.component_count = count;
  BigInt tame = count;
  while (tame % p == 0) tame /= p;
  s.tame_count = tame;
  BigInt binom = 1;
  for (std::size_t q = 0; q <= s.lattice_rank; ++q) {
    s.stalk_ranks.push_back(binom * tame);
    binom = binom * static_cast<unsigned long>(s.lattice_rank - q) / static_cast<unsigned long>(q + 1);
  }
  return s;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Failed: return "failed";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "";
}

namespace {

// Exceptional divisors over the same point as j whose N is a multiple of
// dir, split into connected pieces; returns the piece containing j.
std::vector<int> proportional_component(const ResolutionGraph& g, int j, const std::vector<int>& dir) {
  const Divisor& Ej = g.divisor(j);
  auto multiple = [&](const std::vector<int>& N) {
    long k = -1;
    for (std::size_t c = 0; c < N.size(); ++c) {
      if (dir[c] == 0) {
        if (N[c] != 0) return false;
        continue;
      }
      if (N[c] % dir[c] != 0) return false;
      long kc = N[c] / dir[c];
      if (k >= 0 && kc != k) return false;
      k = kc;
    }
    return k > 0;
  };
  std::set<int> pool;
  for (const auto& d : g.divisors)
    if (d.kind == DivisorKind::Exceptional && d.base_point == Ej.base_point && multiple(d.N)) pool.insert(d.id);
  std::vector<int> comp{j}, stack{j};
  std::set<int> seen{j};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int t : g.neighbours(i))
      if (pool.count(t) && seen.insert(t).second) {
        comp.push_back(t);
        stack.push_back(t);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

}  // namespace

MonodromyReport check_monodromy_conjecture(const ResolutionGraph& g, const ZetaFunction& Z) {
  MonodromyReport report;
  auto points = monodromy_base_points(g);
  std::vector<MonodromyZeta> zetas;
  for (const auto& b : points) zetas.push_back(sabbah_zeta(g, b));

  for (const auto& H : actual_polar_hyperplanes(Z)) {
    HyperplaneVerdict hv{H, hyperplane_cotori(H).components().front(), Verdict::Inconclusive, "", 0, {}, ""};
    for (std::size_t k = 0; k < points.size(); ++k)
      if (long e = net_exponent(zetas[k], hv.cotorus); e != 0) {
        hv.verdict = Verdict::Verified;
        hv.base = points[k].description;
        hv.exponent = e;
        break;
      }
    if (hv.verdict != Verdict::Verified) {
      bool bounded = std::any_of(points.begin(), points.end(),
                                 [&](const auto& b) { return alexander_support_bound(g, b).count(hv.cotorus) > 0; });
      hv.verdict = bounded ? Verdict::Inconclusive : Verdict::Failed;
      hv.note = bounded ? "cotorus lies in a support bound but no monodromy zeta sees it"
                        : "cotorus outside every support bound";
    }
    for (const auto& d : g.divisors) {
      if (d.kind != DivisorKind::Exceptional || g.intersection_count(d.id) < 3) continue;
      if (Hyperplane::normalized(d.N, d.nu) != H) continue;
      WValue wv;
      wv.divisor = d.id;
      wv.component = proportional_component(g, d.id, H.N);
      for (int i : wv.component) wv.w += g.euler_characteristic(i);
      if (wv.w >= 0) {
        hv.verdict = Verdict::Failed;
        hv.note = "w = " + std::to_string(wv.w) + " is not negative for E" + std::to_string(d.id);
      }
      hv.w.push_back(std::move(wv));
    }
    report.hyperplanes.push_back(std::move(hv));
  }
  return report;
}

bool MonodromyReport::all_verified() const {
  return std::all_of(hyperplanes.begin(), hyperplanes.end(), [](const auto& h) { return h.verdict == Verdict::Verified; });
}

bool MonodromyReport::any_failed() const {
  return std::any_of(hyperplanes.begin(), hyperplanes.end(), [](const auto& h) { return h.verdict == Verdict::Failed; });
}

std::string MonodromyReport::to_text() const {
  std::ostringstream os;
  if (hyperplanes.empty()) os << "no polar hyperplanes\n";
  for (const auto& h : hyperplanes) {
    os << h.H.to_string() << " = 0: " << igusa::to_string(h.verdict) << "\n";
    os << "  cotorus " << h.cotorus.to_string() << "\n";
    if (!h.base.empty()) os << "  certified at " << h.base << " with net exponent " << h.exponent << "\n";
    for (const auto& w : h.w) {
      os << "  E" << w.divisor << ": w = " << w.w << " over {";
      for (std::size_t k = 0; k < w.component.size(); ++k) os << (k ? "," : "") << "E" << w.component[k];
      os << "}\n";
    }
    if (!h.note.empty()) os << "  " << h.note << "\n";
  }
  return os.str();
}

std::string MonodromyReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& h : hyperplanes) {
    nlohmann::json e;
    e["hyperplane"] = {{"N", h.H.N}, {"nu", h.H.nu}, {"text", h.H.to_string()}};
    e["cotorus"] = {{"N", h.cotorus.N}, {"tau", h.cotorus.tau.to_string()}};
    e["verdict"] = igusa::to_string(h.verdict);
    if (!h.base.empty()) e["certificate"] = {{"base", h.base}, {"exponent", h.exponent}};
    e["w"] = nlohmann::json::array();
    for (const auto& w : h.w) e["w"].push_back({{"divisor", w.divisor}, {"component", w.component}, {"w", w.w}});
    if (!h.note.empty()) e["note"] = h.note;
    j.push_back(e);
  }
  return nlohmann::json{{"hyperplanes", j}}.dump(2) + "\n";
}

HolomorphyReport check_holomorphy_conjecture(const ResolutionGraph& g, const std::vector<CharacterTuple>& chis, long p,
                                             const ResidualFunction& phi) {
  ReducedGraph rg = reduce_mod_p(g, p);
  auto points = monodromy_base_points(g);
  HolomorphyReport report;
  for (const auto& chi : chis) {
    CharacterVerdict cv;
    cv.chi = chi;
    cv.image = FiniteOrderCharacter::from(chi);
    cv.holomorphic = holomorphy_test(denef_zeta(rg, chi, phi));
    if (cv.holomorphic) {
      cv.verdict = Verdict::Verified;
      cv.note = "zeta function is holomorphic";
      report.characters.push_back(std::move(cv));
      continue;
    }
    bool in_some_closure = false;
    for (const auto& d : g.divisors) {
      bool eligible = d.kind == DivisorKind::Strict || g.intersection_count(d.id) >= 3;
      if (!eligible || !gamma_condition(d.N, chi)) continue;
      long c = content_of(d.N);
      auto cot = TranslatedCotorus::make(primitive(d.N), Rational(BigInt(1), BigInt(c)));
      auto closure = cotorus_closure(cot);
      if (std::none_of(closure.begin(), closure.end(), [&](const auto& z) { return z.contains(cv.image); })) continue;
      in_some_closure = true;
      for (const auto& b : points) {
        bool relevant = std::find(b.divisors.begin(), b.divisors.end(), d.id) != b.divisors.end() &&
                        (d.kind == DivisorKind::Exceptional || b.kind == MonodromyBasePoint::Kind::Smooth);
        if (!relevant || net_exponent(sabbah_zeta(g, b), cot) == 0) continue;
        cv.verdict = Verdict::Verified;
        cv.divisor = d.id;
        cv.cotorus = cot;
        cv.base = b.description;
        break;
      }
      if (cv.verdict == Verdict::Verified) break;
    }
    if (cv.verdict != Verdict::Verified) {
      cv.verdict = in_some_closure ? Verdict::Inconclusive : Verdict::Failed;
      cv.note = in_some_closure ? "witness cotorus not seen by any monodromy zeta"
                                : "character outside the closure of every witness cotorus";
    }
    report.characters.push_back(std::move(cv));
  }
  return report;
}

bool HolomorphyReport::all_verified() const {
  return std::all_of(characters.begin(), characters.end(), [](const auto& c) { return c.verdict == Verdict::Verified; });
}

bool HolomorphyReport::any_failed() const {
  return std::any_of(characters.begin(), characters.end(), [](const auto& c) { return c.verdict == Verdict::Failed; });
}

std::string HolomorphyReport::to_text() const {
  std::ostringstream os;
  for (const auto& c : characters) {
    os << "chi = " << c.chi.to_string() << " (phi " << c.image.to_string() << "): " << igusa::to_string(c.verdict);
    os << (c.holomorphic ? ", holomorphic" : ", not holomorphic") << "\n";
    if (c.divisor)
      os << "  witness E" << *c.divisor << ", cotorus " << c.cotorus->to_string() << ", seen at " << c.base << "\n";
    if (!c.note.empty()) os << "  " << c.note << "\n";
  }
  return os.str();
}

std::string HolomorphyReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : characters) {
    nlohmann::json e;
    e["chi"] = c.chi.exponents;
    e["holomorphic"] = c.holomorphic;
    e["verdict"] = igusa::to_string(c.verdict);
    if (c.divisor) {
      e["witness"] = *c.divisor;
      e["cotorus"] = {{"N", c.cotorus->N}, {"tau", c.cotorus->tau.to_string()}};
      e["base"] = c.base;
    }
    if (!c.note.empty()) e["note"] = c.note;
    j.push_back(e);
  }
  return nlohmann::json{{"characters", j}}.dump(2) + "\n";
}

}  // namespace igusa
