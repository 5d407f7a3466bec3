#include "igusa/graph_io.hpp"

#include <json.hpp>

#include "igusa/algebra/parse.hpp"

namespace igusa {

using nlohmann::json;

namespace {

const std::vector<std::string> kBase{"x", "y"};
const std::vector<std::string> kChart{"u", "v"};

json point_json(const RationalPoint& p) { return json::array({p.u.to_string(), p.v.to_string()}); }

RationalPoint point_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("a point is a pair of rationals");
  auto coord = [](const json& c) {
    return c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<long>());
  };
  return {coord(j[0]), coord(j[1])};
}

const char* kind_name(ChartKind k) {
  switch (k) {
    case ChartKind::Base: return "base";
    case ChartKind::A: return "A";
    case ChartKind::B: return "B";
  }
  return "?";
}

ChartKind kind_from(const std::string& s) {
  if (s == "base") return ChartKind::Base;
  if (s == "A") return ChartKind::A;
  if (s == "B") return ChartKind::B;
  throw ParseError("unknown chart kind '" + s + "'");
}

}  // namespace

std::string graph_to_json(const ResolutionGraph& g) {
  json j;
  j["format"] = "igusa-resolution-graph/1";
  j["r"] = g.r;
  j["polynomials"] = json::array();
  for (const auto& f : g.polynomials) j["polynomials"].push_back(f.to_string(kBase));
  j["divisors"] = json::array();
  for (const auto& d : g.divisors) {
    json dj{{"id", d.id},
            {"kind", d.kind == DivisorKind::Strict ? "strict" : "exceptional"},
            {"N", d.N},
            {"nu", d.nu}};
    if (d.base_point) dj["base_point"] = *d.base_point;
    if (d.equation) dj["equation"] = d.equation->to_string(kBase);
    j["divisors"].push_back(dj);
  }
  j["intersections"] = json::array();
  for (const auto& ip : g.intersections) {
    json ij{{"divisors", {ip.first, ip.second}}};
    if (ip.chart >= 0) ij["chart"] = ip.chart;
    if (ip.point) ij["point"] = point_json(*ip.point);
    if (ip.base) ij["base"] = point_json(*ip.base);
    j["intersections"].push_back(ij);
  }
  j["lineage"] = json::array();
  for (const auto& b : g.lineage) j["lineage"].push_back({{"point", point_json(b.point)}, {"divisors", b.divisors}});
  j["charts"] = json::array();
  for (const auto& c : g.charts) {
    const auto& names = c.kind == ChartKind::Base ? kBase : kChart;
    json cj{{"id", c.id},
            {"parent", c.parent},
            {"kind", kind_name(c.kind)},
            {"center", point_json(c.center)},
            {"to_base", {c.to_base_x.to_string(kChart), c.to_base_y.to_string(kChart)}},
            {"leaf", c.leaf},
            {"jacobian_constant", c.jacobian_constant.to_string()}};
    if (c.kind == ChartKind::Base) cj["to_base"] = {"u", "v"};
    cj["unit_constants"] = json::array();
    for (const auto& u : c.unit_constants) cj["unit_constants"].push_back(u.to_string());
    cj["divisors"] = json::array();
    for (const auto& cd : c.divisors)
      cj["divisors"].push_back({{"id", cd.divisor}, {"equation", cd.equation.to_string(names)}});
    j["charts"].push_back(cj);
  }
  return j.dump(2) + "\n";
}

ResolutionGraph graph_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph file is not valid JSON: ") + e.what());
  }
  try {
    ResolutionGraph g;
    g.r = j.at("r").get<std::size_t>();
    if (g.r == 0) throw ParseError("r must be positive");
    if (j.contains("polynomials"))
      for (const auto& p : j["polynomials"]) g.polynomials.push_back(parse_polynomial(p.get<std::string>(), kBase));
    for (const auto& dj : j.at("divisors")) {
      Divisor d;
      d.id = dj.at("id").get<int>();
      if (d.id != static_cast<int>(g.divisors.size())) throw ParseError("divisor ids must be 0, 1, 2, ... in order");
      std::string kind = dj.at("kind").get<std::string>();
      if (kind != "strict" && kind != "exceptional") throw ParseError("unknown divisor kind '" + kind + "'");
      d.kind = kind == "strict" ? DivisorKind::Strict : DivisorKind::Exceptional;
      d.N = dj.at("N").get<std::vector<int>>();
      if (d.N.size() != g.r) throw ParseError("divisor " + std::to_string(d.id) + " has an N vector of wrong length");
      for (int n : d.N)
        if (n < 0) throw ParseError("negative multiplicity");
      d.nu = dj.at("nu").get<long>();
      if (d.nu < 1) throw ParseError("nu must be at least 1");
      if (dj.contains("base_point")) d.base_point = dj["base_point"].get<int>();
      if (dj.contains("equation")) d.equation = parse_polynomial(dj["equation"].get<std::string>(), kBase);
      g.divisors.push_back(d);
    }
    auto check_id = [&](int id) {
      if (id < 0 || id >= static_cast<int>(g.divisors.size()))
        throw ParseError("intersection refers to unknown divisor " + std::to_string(id));
    };
    for (const auto& ij : j.value("intersections", json::array())) {
      IntersectionPoint ip;
      json pair = ij.is_array() ? ij : ij.at("divisors");
      int a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
      check_id(a);
      check_id(b);
      if (a == b) throw ParseError("a divisor cannot meet itself");
      ip.first = std::min(a, b);
      ip.second = std::max(a, b);
      if (ij.is_object()) {
        ip.chart = ij.value("chart", -1);
        if (ij.contains("point")) ip.point = point_from(ij["point"]);
        if (ij.contains("base")) ip.base = point_from(ij["base"]);
      }
      g.intersections.push_back(ip);
    }
    for (const auto& bj : j.value("lineage", json::array())) {
      BasePoint b{point_from(bj.at("point")), bj.at("divisors").get<std::vector<int>>()};
      for (int id : b.divisors) check_id(id);
      g.lineage.push_back(b);
    }
    for (const auto& cj : j.value("charts", json::array())) {
      Chart c;
      c.id = cj.at("id").get<int>();
      c.parent = cj.at("parent").get<int>();
      c.kind = kind_from(cj.at("kind").get<std::string>());
      c.center = point_from(cj.at("center"));
      c.leaf = cj.at("leaf").get<bool>();
      c.jacobian_constant = Rational::parse(cj.at("jacobian_constant").get<std::string>());
      const auto& names = c.kind == ChartKind::Base ? kBase : kChart;
      auto tb = cj.at("to_base");
      c.to_base_x = parse_polynomial(tb.at(0).get<std::string>(), kChart);
      c.to_base_y = parse_polynomial(tb.at(1).get<std::string>(), kChart);
      for (const auto& u : cj.at("unit_constants")) c.unit_constants.push_back(Rational::parse(u.get<std::string>()));
      if (c.unit_constants.size() != g.r) throw ParseError("chart unit constants have wrong length");
      for (const auto& dj : cj.at("divisors")) {
        int id = dj.at("id").get<int>();
        check_id(id);
        c.divisors.push_back({id, parse_polynomial(dj.at("equation").get<std::string>(), names)});
      }
      g.charts.push_back(std::move(c));
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed graph file: ") + e.what());
  }
}

}  // namespace igusa
