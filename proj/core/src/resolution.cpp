#include "igusa/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "igusa/algebra/factor.hpp"

namespace igusa {

namespace {

PolyQ var(std::size_t i) { return PolyQ::variable(2, i); }
PolyQ cst(const Rational& c) { return PolyQ::constant(2, c); }

Rational eval(const PolyQ& f, const RationalPoint& p) {
  std::vector<Rational> pt{p.u, p.v};
  return f.evaluate(pt);
}

// Parent-chart coordinates of a point of a blown-up chart.
RationalPoint to_parent(const Chart& c, const RationalPoint& p) {
  if (c.kind == ChartKind::A) return {c.center.u + p.u, c.center.v + p.u * p.v};
  return {c.center.u + p.u * p.v, c.center.v + p.v};
}

// Divide out coord^m where coord is variable `which`.
PolyQ strip_power(const PolyQ& h, std::size_t which, int m) {
  PolyQ r(2);
  for (const auto& [e, c] : h.terms()) {
    Exponents d(e);
    d[which] -= m;
    if (d[which] < 0) throw std::logic_error("blow-up: multiplicity bookkeeping failed");
    r.add_term(d, c);
  }
  return r;
}

std::string where(const Chart& c) { return "chart " + std::to_string(c.id); }

std::vector<RationalPoint> zeros_or_throw(const std::vector<PolyQ>& sys, const Chart& c) {
  try {
    return rational_common_zeros(sys);
  } catch (const IrrationalSolution& e) {
    bool base = c.kind == ChartKind::Base;
    std::string coord = e.coordinate == 0 ? (base ? "x" : "u") : (base ? "y" : "v");
    throw NonRationalCenter(e.minimal_polynomial.to_string(coord), where(c));
  }
}

std::vector<RationalPoint> singular_points(const PolyQ& g, const Chart& c) {
  std::vector<PolyQ> sys{g, g.derivative(0), g.derivative(1)};
  return zeros_or_throw(sys, c);
}

}  // namespace

int ResolutionGraph::intersection_count(int id) const {
  int n = 0;
  for (const auto& ip : intersections)
    if (ip.first == id || ip.second == id) ++n;
  return n;
}

std::vector<int> ResolutionGraph::neighbours(int id) const {
  std::vector<int> out;
  for (const auto& ip : intersections) {
    if (ip.first == id) out.push_back(ip.second);
    if (ip.second == id) out.push_back(ip.first);
  }
  return out;
}

long ResolutionGraph::euler_characteristic(int id) const { return 2 - intersection_count(id); }

std::size_t ResolutionGraph::exceptional_count() const {
  return static_cast<std::size_t>(std::count_if(divisors.begin(), divisors.end(), [](const Divisor& d) {
    return d.kind == DivisorKind::Exceptional;
  }));
}

ResolutionGraph initial_graph(const std::vector<PolyQ>& F) {
  if (F.empty()) throw std::invalid_argument("at least one polynomial is required");
  ResolutionGraph g;
  g.r = F.size();
  g.polynomials = F;
  Chart base;
  base.id = 0;
  base.kind = ChartKind::Base;
  base.to_base_x = var(0);
  base.to_base_y = var(1);
  for (std::size_t j = 0; j < F.size(); ++j) {
    const PolyQ& f = F[j];
    if (f.nvars() != 2) throw std::invalid_argument("polynomials must be in the variables x, y");
    if (f.is_zero()) throw std::invalid_argument("polynomial " + std::to_string(j + 1) + " is zero");
    if (f.is_constant()) {
      base.unit_constants.push_back(f.constant_term());
      continue;
    }
    auto fac = factor(f);
    base.unit_constants.push_back(fac.unit);
    for (const auto& [h, m] : fac.factors) {
      auto it = std::find_if(g.divisors.begin(), g.divisors.end(),
                             [&](const Divisor& d) { return d.equation && *d.equation == h; });
      if (it == g.divisors.end()) {
        Divisor d;
        d.id = static_cast<int>(g.divisors.size());
        d.kind = DivisorKind::Strict;
        d.N.assign(F.size(), 0);
        d.nu = 1;
        d.equation = h;
        g.divisors.push_back(d);
        base.divisors.push_back({d.id, h});
        it = g.divisors.end() - 1;
      }
      it->N[j] += m;
    }
  }
  g.charts.push_back(std::move(base));
  return g;
}

bool is_owned(const ResolutionGraph& g, int chart, const RationalPoint& p) {
  const Chart& c = g.charts.at(static_cast<std::size_t>(chart));
  switch (c.kind) {
    case ChartKind::Base: return true;
    case ChartKind::A: return is_owned(g, c.parent, to_parent(c, p));
    case ChartKind::B: return p.u.is_zero() && is_owned(g, c.parent, to_parent(c, p));
  }
  return false;
}

void blow_up_point(ResolutionGraph& g, int chart_id, const RationalPoint& P) {
  Chart C = g.charts.at(static_cast<std::size_t>(chart_id));
  if (!C.leaf) throw std::invalid_argument("blow-up center must lie in a leaf chart");
  int e = static_cast<int>(g.divisors.size());

  RationalPoint base{eval(C.to_base_x, P), eval(C.to_base_y, P)};
  auto bp = std::find_if(g.lineage.begin(), g.lineage.end(), [&](const BasePoint& b) { return b.point == base; });
  if (bp == g.lineage.end()) {
    g.lineage.push_back({base, {}});
    bp = g.lineage.end() - 1;
  }
  bp->divisors.push_back(e);

  // multiplicities at P
  std::vector<PolyQ> shift{cst(P.u) + var(0), cst(P.v) + var(1)};
  std::vector<int> mult;
  Divisor E;
  E.id = e;
  E.kind = DivisorKind::Exceptional;
  E.N.assign(g.r, 0);
  E.nu = 2;
  E.base_point = static_cast<int>(bp - g.lineage.begin());
  for (const auto& cd : C.divisors) {
    int m = cd.equation.compose(shift).order();
    mult.push_back(m);
    const Divisor& D = g.divisor(cd.divisor);
    for (std::size_t j = 0; j < g.r; ++j) E.N[j] += m * D.N[j];
    E.nu += m * (D.nu - 1);
  }
  if (std::all_of(mult.begin(), mult.end(), [](int m) { return m == 0; }))
    throw std::invalid_argument("blow-up center lies on no divisor");

  g.charts[static_cast<std::size_t>(chart_id)].leaf = false;
  for (ChartKind kind : {ChartKind::A, ChartKind::B}) {
    std::size_t ecoord = kind == ChartKind::A ? 0 : 1;
    std::vector<PolyQ> s = kind == ChartKind::A
                               ? std::vector<PolyQ>{cst(P.u) + var(0), cst(P.v) + var(0) * var(1)}
                               : std::vector<PolyQ>{cst(P.u) + var(0) * var(1), cst(P.v) + var(1)};
    Chart N;
    N.id = static_cast<int>(g.charts.size());
    N.parent = chart_id;
    N.kind = kind;
    N.center = P;
    N.to_base_x = C.to_base_x.compose(s);
    N.to_base_y = C.to_base_y.compose(s);
    N.unit_constants = C.unit_constants;
    N.jacobian_constant = C.jacobian_constant;
    for (std::size_t i = 0; i < C.divisors.size(); ++i) {
      const auto& cd = C.divisors[i];
      const Divisor& D = g.divisor(cd.divisor);
      PolyQ strict = strip_power(cd.equation.compose(s), ecoord, mult[i]);
      Rational content;
      PolyQ prim = primitive_part(strict, &content);
      for (std::size_t j = 0; j < g.r; ++j) N.unit_constants[j] *= pow(content, D.N[j]);
      N.jacobian_constant *= pow(content, D.nu - 1);
      if (!strict.is_constant()) N.divisors.push_back({cd.divisor, prim});
    }
    N.divisors.push_back({e, var(ecoord)});
    g.charts.push_back(std::move(N));
  }
  g.divisors.push_back(std::move(E));
}

std::vector<RationalPoint> bad_points(const ResolutionGraph& g, int chart) {
  const Chart& c = g.charts.at(static_cast<std::size_t>(chart));
  std::set<RationalPoint> bad;
  for (const auto& cd : c.divisors)
    for (const auto& p : singular_points(cd.equation, c)) bad.insert(p);
  for (std::size_t i = 0; i < c.divisors.size(); ++i)
    for (std::size_t j = i + 1; j < c.divisors.size(); ++j) {
      const PolyQ& a = c.divisors[i].equation;
      const PolyQ& b = c.divisors[j].equation;
      for (const auto& p : zeros_or_throw({a, b}, c)) {
        Rational det = eval(a.derivative(0), p) * eval(b.derivative(1), p) -
                       eval(a.derivative(1), p) * eval(b.derivative(0), p);
        int through = 0;
        for (const auto& cd : c.divisors)
          if (eval(cd.equation, p).is_zero()) ++through;
        if (det.is_zero() || through > 2) bad.insert(p);
      }
    }
  std::vector<RationalPoint> out;
  for (const auto& p : bad)
    if (is_owned(g, chart, p)) out.push_back(p);
  return out;
}

void compute_intersections(ResolutionGraph& g) {
  g.intersections.clear();
  for (const auto& c : g.charts) {
    if (!c.leaf) continue;
    for (std::size_t i = 0; i < c.divisors.size(); ++i)
      for (std::size_t j = i + 1; j < c.divisors.size(); ++j)
        for (const auto& p : zeros_or_throw({c.divisors[i].equation, c.divisors[j].equation}, c)) {
          if (!is_owned(g, c.id, p)) continue;
          IntersectionPoint ip;
          ip.first = std::min(c.divisors[i].divisor, c.divisors[j].divisor);
          ip.second = std::max(c.divisors[i].divisor, c.divisors[j].divisor);
          ip.chart = c.id;
          ip.point = p;
          ip.base = RationalPoint{eval(c.to_base_x, p), eval(c.to_base_y, p)};
          g.intersections.push_back(ip);
        }
  }
  std::stable_sort(g.intersections.begin(), g.intersections.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second) < std::tie(b.first, b.second);
  });
}

ResolutionGraph resolve(const std::vector<PolyQ>& F, const ResolveOptions& options) {
  ResolutionGraph g = initial_graph(F);
  for (int step = 0;; ++step) {
    std::vector<int> order;
    for (const auto& c : g.charts)
      if (c.leaf) order.push_back(c.id);
    if (options.highest_chart_first) std::reverse(order.begin(), order.end());
    bool blew_up = false;
    for (int id : order) {
      auto pts = bad_points(g, id);
      if (pts.empty()) continue;
      if (step >= options.max_blow_ups) throw Error("resolution did not terminate within the blow-up limit");
      blow_up_point(g, id, pts.front());
      blew_up = true;
      break;
    }
    if (!blew_up) break;
  }
  compute_intersections(g);
  return g;
}

std::vector<StarRelationCheck> validate_star_relations(const ResolutionGraph& g) {
  std::vector<StarRelationCheck> out;
  for (const auto& d : g.divisors) {
    if (d.kind != DivisorKind::Exceptional) continue;
    auto nb = g.neighbours(d.id);
    for (std::size_t k = 0; k < g.r; ++k) {
      if (d.N[k] == 0) continue;
      StarRelationCheck c;
      c.divisor = d.id;
      c.component = k;
      long total = 0;
      for (int t : nb) {
        const Divisor& T = g.divisor(t);
        c.alpha_sum += Rational(T.nu) - Rational(T.N[k]) * Rational(d.nu) / Rational(d.N[k]) - Rational(1);
        total += T.N[k];
      }
      c.sum_ok = c.alpha_sum == Rational(-2);
      c.divisibility_ok = total % d.N[k] == 0;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<Stratum> strata(const ResolutionGraph& g) {
  std::vector<Stratum> out;
  out.push_back({{}, "complement of the total transform", 0});
  for (const auto& d : g.divisors) {
    int k = g.intersection_count(d.id);
    std::string desc = d.kind == DivisorKind::Exceptional
                           ? "projective line minus " + std::to_string(k) + " point(s)"
                           : "strict component minus " + std::to_string(k) + " point(s)";
    out.push_back({{d.id}, desc, 0});
  }
  std::map<std::pair<int, int>, int> pairs;
  for (const auto& ip : g.intersections) ++pairs[{ip.first, ip.second}];
  for (const auto& [pr, n] : pairs)
    out.push_back({{pr.first, pr.second}, std::to_string(n) + " intersection point(s)", n});
  return out;
}

std::string export_dual_graph(const ResolutionGraph& g) {
  std::ostringstream os;
  os << "graph resolution {\n";
  for (const auto& d : g.divisors) {
    os << "  E" << d.id << " [label=\"" << d.id << ":(N=(";
    for (std::size_t j = 0; j < d.N.size(); ++j) os << (j ? "," : "") << d.N[j];
    os << "), nu=" << d.nu << ", " << (d.kind == DivisorKind::Strict ? "strict" : "exceptional") << ")\"";
    if (d.kind == DivisorKind::Strict) os << " shape=box";
    os << "];\n";
  }
  for (const auto& ip : g.intersections) os << "  E" << ip.first << " -- E" << ip.second << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace igusa
