#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "common.hpp"
#include "igusa/errors.hpp"
#include "igusa/graph_io.hpp"

namespace igusa {
namespace {

using testing::P;
using testing::Q;
using testing::resolve_all;

std::vector<std::pair<int, long>> data(const ResolutionGraph& g) {
  std::vector<std::pair<int, long>> out;
  for (const auto& d : g.divisors) out.emplace_back(d.N.at(0), d.nu);
  return out;
}

TEST(Resolution, CuspNumericalData) {
  auto g = resolve_all({"y^2-x^3"});
  EXPECT_EQ(data(g), (std::vector<std::pair<int, long>>{{1, 1}, {2, 2}, {3, 3}, {6, 5}}));
  EXPECT_EQ(g.divisor(3).kind, DivisorKind::Exceptional);
  EXPECT_EQ(g.intersection_count(3), 3);
  EXPECT_EQ(g.intersection_count(1), 1);
  EXPECT_EQ(g.euler_characteristic(3), -1);
  EXPECT_EQ(g.exceptional_count(), 3u);
  ASSERT_EQ(g.lineage.size(), 1u);
  EXPECT_EQ(g.lineage[0].point, (RationalPoint{Q(0), Q(0)}));
}

TEST(Resolution, HigherCusps) {
  auto g = resolve_all({"y^2-x^5"});
  EXPECT_EQ(data(g), (std::vector<std::pair<int, long>>{{1, 1}, {2, 2}, {4, 3}, {5, 4}, {10, 7}}));
  auto e6 = data(resolve_all({"y^3-x^4"}));
  EXPECT_TRUE(std::find(e6.begin(), e6.end(), std::pair<int, long>{12, 7}) != e6.end());
  auto e8 = data(resolve_all({"y^3-x^5"}));
  EXPECT_TRUE(std::find(e8.begin(), e8.end(), std::pair<int, long>{15, 8}) != e8.end());
}

TEST(Resolution, SnccInputsNeedNoBlowUp) {
  for (const auto& polys : std::vector<std::vector<std::string>>{{"x"}, {"x*y"}, {"x^2*y^3"}, {"x", "y"}, {"x", "x*y"}}) {
    auto g = resolve_all(polys);
    EXPECT_EQ(g.exceptional_count(), 0u) << polys.front();
  }
  auto g = resolve_all({"x", "x*y"});
  ASSERT_EQ(g.divisors.size(), 2u);
  EXPECT_EQ(g.divisors[0].N, (std::vector<int>{1, 1}));
  EXPECT_EQ(g.divisors[1].N, (std::vector<int>{0, 1}));
}

TEST(Resolution, TriplePoint) {
  auto g = resolve_all({"x*y*(x+y)"});
  ASSERT_EQ(g.exceptional_count(), 1u);
  const auto& E = g.divisors.back();
  EXPECT_EQ(E.N, std::vector<int>{3});
  EXPECT_EQ(E.nu, 2);
  EXPECT_EQ(g.intersection_count(E.id), 3);
}

TEST(Resolution, IrrationalCenters) {
  try {
    resolve_all({"(x^2-2)*y"});
    FAIL() << "expected NonRationalCenter";
  } catch (const NonRationalCenter& e) {
    EXPECT_EQ(e.minimal_polynomial, "x^2 - 2");
  }
  EXPECT_THROW(resolve_all({"y^2 - 2*x^2"}), NonRationalCenter);
}

TEST(Resolution, LeafChartsAreClean) {
  for (const auto& s : {"y^2-x^3", "y^2-x^5", "x*y*(x+y)", "(y-x^2)*(y+x^2)"}) {
    auto g = resolve_all({s});
    for (const auto& c : g.charts)
      if (c.leaf) EXPECT_TRUE(bad_points(g, c.id).empty()) << s << " chart " << c.id;
  }
}

TEST(Resolution, ChartOrderDoesNotChangeData) {
  for (const auto& s : {"y^2-x^3", "y^2-x^5", "(y-x^2)*(y+x^2)"}) {
    auto a = data(resolve_all({s}));
    ResolveOptions opt;
    opt.highest_chart_first = true;
    auto b = data(resolve({P(s)}, opt));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b) << s;
  }
}

// alpha_t = nu_t - nu_i N_t / N_i for the neighbours of E_i.
std::vector<Rational> alphas(const ResolutionGraph& g, int i) {
  const auto& Ei = g.divisor(i);
  std::vector<Rational> out;
  for (int t : g.neighbours(i)) {
    const auto& Et = g.divisor(t);
    out.push_back(Rational(Et.nu) - Rational(Ei.nu) * Rational(Et.N[0]) / Rational(Ei.N[0]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Resolution, StarRelationsCusp) {
  auto g = resolve_all({"y^2-x^3"});
  EXPECT_EQ(alphas(g, 1), std::vector<Rational>{Q(-1)});
  EXPECT_EQ(alphas(g, 3), (std::vector<Rational>{Q(1, 6), Q(1, 3), Q(1, 2)}));
  for (const auto& c : validate_star_relations(g)) {
    EXPECT_TRUE(c.sum_ok) << "E" << c.divisor;
    EXPECT_TRUE(c.divisibility_ok) << "E" << c.divisor;
    EXPECT_EQ(c.alpha_sum, Q(-2));
  }
}

TEST(Resolution, StarRelationsRandom) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-2, 2), ex(1, 5);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 15; ++trial) {
    std::string s = "y^" + std::to_string(ex(rng)) + " + " + std::to_string(coef(rng)) + "*x^" +
                    std::to_string(ex(rng)) + " + " + std::to_string(coef(rng)) + "*x*y^2";
    PolyQ f = P(s);
    if (f.is_zero() || f.is_constant()) continue;
    try {
      auto g = resolve({f});
      for (const auto& c : validate_star_relations(g)) EXPECT_TRUE(c.sum_ok && c.divisibility_ok) << s;
      ++checked;
    } catch (const NonRationalCenter&) {
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(Resolution, StrataAndDot) {
  auto g = resolve_all({"y^2-x^3"});
  auto st = strata(g);
  auto e3 = std::find_if(st.begin(), st.end(), [](const Stratum& s) { return s.I == std::vector<int>{3}; });
  ASSERT_NE(e3, st.end());
  std::string dot = export_dual_graph(g);
  EXPECT_NE(dot.find("E3 [label=\"3:(N=(6), nu=5"), std::string::npos);
  EXPECT_NE(dot.find("E0 -- E3"), std::string::npos);
  EXPECT_NE(dot.find("shape=box"), std::string::npos);
}

TEST(GraphIo, RoundTrip) {
  for (const auto& s : {"y^2-x^3", "x*y*(x+y)"}) {
    auto g = resolve_all({s});
    std::string text = graph_to_json(g);
    EXPECT_EQ(graph_to_json(graph_from_json(text)), text);
  }
  EXPECT_THROW(graph_from_json("{\"format\": 3}"), ParseError);
  EXPECT_THROW(graph_from_json("not json"), ParseError);
}

TEST(GraphIo, HandAuthoredWithoutCharts) {
  std::string text = R"({"format": "igusa-resolution-graph/1", "r": 1, "polynomials": ["x"],
    "divisors": [{"id": 0, "kind": "strict", "N": [1], "nu": 1},
                 {"id": 1, "kind": "exceptional", "N": [2], "nu": 3}],
    "intersections": [[0, 1]]})";
  auto g = graph_from_json(text);
  EXPECT_FALSE(g.has_charts());
  EXPECT_EQ(g.intersection_count(1), 1);
}

}  // namespace
}  // namespace igusa
