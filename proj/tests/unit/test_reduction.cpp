#include <gtest/gtest.h>

#include <map>

#include "common.hpp"
#include "igusa/errors.hpp"
#include "igusa/reduction.hpp"

namespace igusa {
namespace {

using testing::Q;
using testing::resolve_all;

int divisor_with_equation(const ResolutionGraph& g, const std::string& eq) {
  for (const auto& d : g.divisors)
    if (d.equation && d.equation->to_string() == eq) return d.id;
  return -1;
}

std::string bad_prime_reason(const ResolutionGraph& g, long p) {
  try {
    reduce_mod_p(g, p);
  } catch (const BadPrime& e) {
    return e.reason;
  }
  return "";
}

TEST(Characters, PrimitiveRootsAndOrders) {
  EXPECT_EQ(smallest_primitive_root(7), 3);
  EXPECT_EQ(smallest_primitive_root(13), 2);
  EXPECT_EQ(smallest_primitive_root(5), 2);
  auto chi = CharacterTuple::make(13, {3});
  EXPECT_EQ(chi.order(0), 4);
  EXPECT_EQ(CharacterTuple::all(5, 2).size(), 16u);
  EXPECT_TRUE(CharacterTuple::trivial(7, 2).is_trivial());
}

TEST(Characters, GammaCondition) {
  EXPECT_TRUE(gamma_condition({5}, CharacterTuple::trivial(7, 1)));
  EXPECT_TRUE(gamma_condition({6}, CharacterTuple::make(7, {3})));
  EXPECT_FALSE(gamma_condition({6}, CharacterTuple::make(5, {1})));
  EXPECT_TRUE(gamma_condition({1, 1}, CharacterTuple::make(5, {1, 3})));
}

TEST(Reduction, GoodAndBadPrimes) {
  auto cusp = resolve_all({"y^2-x^3"});
  EXPECT_NO_THROW(reduce_mod_p(cusp, 7));
  EXPECT_EQ(bad_prime_reason(cusp, 2).rfind("tameness", 0), 0u);
  EXPECT_EQ(bad_prime_reason(cusp, 3).rfind("tameness", 0), 0u);
  EXPECT_EQ(bad_prime_reason(resolve_all({"x/3 + y^2"}), 3).rfind("denominator", 0), 0u);
  // branches separated only by a multiple of 5 coincide mod 5
  EXPECT_FALSE(bad_prime_reason(resolve_all({"(y-x^2)*(y-x^2-5*x^3)"}), 5).empty());
  EXPECT_NO_THROW(reduce_mod_p(resolve_all({"(y-x^2)*(y-x^2-5*x^3)"}), 7));
  EXPECT_THROW(reduce_mod_p(cusp, 9), std::invalid_argument);
}

TEST(Reduction, OmegaForNonResidueConstant) {
  auto g = resolve_all({"3*x^2"});
  auto rg = reduce_mod_p(g, 7);
  auto chi = CharacterTuple::make(7, {3});
  EXPECT_EQ(omega_chi(rg, 0, 0, 1, chi), CyclotomicNumber(-1));
  EXPECT_EQ(omega_chi(rg, 0, 0, 4, CharacterTuple::trivial(7, 1)), CyclotomicNumber(1));
}

TEST(Reduction, MonomialCounts) {
  auto g = resolve_all({"x^2*y^3"});
  auto rg = reduce_mod_p(g, 5);
  int xaxis = divisor_with_equation(g, "y");
  int yaxis = divisor_with_equation(g, "x");
  ASSERT_GE(xaxis, 0);
  ASSERT_GE(yaxis, 0);
  auto chi = CharacterTuple::trivial(5, 1);
  auto one = ResidualFunction::unit_ball();
  EXPECT_EQ(c_coefficient({xaxis}, chi, one, rg), CyclotomicNumber(4));
  EXPECT_EQ(c_coefficient({xaxis, yaxis}, chi, one, rg), CyclotomicNumber(1));

  auto sq = reduce_mod_p(resolve_all({"x^2"}), 5);
  EXPECT_EQ(c_coefficient({0}, CharacterTuple::make(5, {2}), one, sq), CyclotomicNumber(5));
}

TEST(Reduction, StratumCounts) {
  auto cusp = reduce_mod_p(resolve_all({"y^2-x^3"}), 7);
  EXPECT_EQ(count_stratum_points({3}, cusp), 5);
  EXPECT_EQ(count_stratum_points({0, 3}, cusp), 1);
  EXPECT_EQ(count_stratum_points({1, 3}, cusp), 1);
  EXPECT_EQ(count_stratum_points({0, 1}, cusp), 0);
  EXPECT_EQ(cusp.total_points, 49 + 3 * 7);
  auto node = reduce_mod_p(resolve_all({"x*y"}), 5);
  EXPECT_EQ(count_stratum_points({}, node), 16);
}

TEST(Reduction, TrivialCharacterCoefficientIsPointCount) {
  for (const auto& [s, p] : std::vector<std::pair<std::string, long>>{{"y^2-x^3", 7}, {"x*y*(x+y)", 5}, {"y^2-x^5", 7}}) {
    auto rg = reduce_mod_p(resolve_all({s}), p);
    std::set<std::vector<int>> seen;
    for (const auto& [key, n] : rg.census) seen.insert(key.I);
    long total = 0;
    for (const auto& I : seen) {
      long count = count_stratum_points(I, rg);
      total += count;
      EXPECT_EQ(c_coefficient(I, CharacterTuple::trivial(p, 1), ResidualFunction::unit_ball(), rg),
                CyclotomicNumber(Rational(count)));
    }
    EXPECT_EQ(total, p * p + static_cast<long>(rg.graph.exceptional_count()) * p) << s;
  }
}

TEST(Reduction, CharacterOrthogonality) {
  auto rg = reduce_mod_p(resolve_all({"x"}), 7);
  for (long e = 1; e < 6; ++e)
    EXPECT_TRUE(c_coefficient({}, CharacterTuple::make(7, {e}), ResidualFunction::unit_ball(), rg).is_zero());
}

// Sibling charts of one blow-up share the points of the new divisor other
// than the two poles; Omega must agree there.
TEST(Reduction, OmegaIsChartIndependent) {
  for (const auto& [s, p] : std::vector<std::pair<std::string, long>>{{"y^2-x^3", 7}, {"y^2-x^3", 13}, {"y^2-x^5", 11}}) {
    auto g = resolve_all({s});
    auto rg = reduce_mod_p(g, p);
    int compared = 0;
    for (const auto& a : g.charts) {
      if (a.kind != ChartKind::A) continue;
      for (const auto& b : g.charts) {
        if (b.kind != ChartKind::B || b.parent != a.parent || !(b.center == a.center)) continue;
        int E = a.divisors.back().divisor;
        for (const auto& chi : CharacterTuple::all(p, 1)) {
          if (!gamma_condition(g.divisor(E).N, chi)) continue;
          for (long v = 1; v < p; ++v) {
            long inv = 1;
            while (inv * v % p != 1) ++inv;
            if (rg.divisors_at(a.id, 0, v) != std::vector<int>{E}) continue;
            if (rg.divisors_at(b.id, inv, 0) != std::vector<int>{E}) continue;
            EXPECT_EQ(omega_chi(rg, a.id, 0, v, chi), omega_chi(rg, b.id, inv, 0, chi))
                << s << " p=" << p << " E" << E << " v=" << v;
            ++compared;
          }
        }
      }
    }
    EXPECT_GT(compared, 0) << s;
  }
}

TEST(ResidualFunctions, PresetsAndTables) {
  EXPECT_EQ(ResidualFunction::unit_ball().value(3, 4), Q(1));
  EXPECT_EQ(ResidualFunction::origin_class().value(0, 0), Q(1));
  EXPECT_EQ(ResidualFunction::origin_class().value(0, 1), Q(0));
  auto t = ResidualFunction::from_json(R"({"p": 7, "default": "1/2", "values": [{"x": 8, "y": 0, "value": 3}]})");
  EXPECT_EQ(t.value(1, 0), Q(3));
  EXPECT_EQ(t.value(2, 2), Q(1, 2));
  EXPECT_THROW(ResidualFunction::from_json(R"({"p": 8, "values": []})"), ParseError);
}

}  // namespace
}  // namespace igusa
