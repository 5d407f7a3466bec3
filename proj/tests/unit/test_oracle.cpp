#include <gtest/gtest.h>

#include "common.hpp"
#include "igusa/errors.hpp"
#include "igusa/oracle.hpp"

namespace igusa {
namespace {

using testing::P;
using testing::Q;
using testing::resolve_all;

CoefficientTable table(const std::vector<std::string>& F, long p, int B, std::vector<long> e = {},
                       const ResidualFunction& phi = ResidualFunction::unit_ball()) {
  std::vector<PolyQ> polys;
  for (const auto& s : F) polys.push_back(P(s));
  if (e.empty()) e.assign(F.size(), 0);
  OracleOptions opt;
  opt.bound = B;
  return enumerate_coefficients(polys, CharacterTuple::make(p, e), phi, p, opt);
}

TEST(Oracle, HandValues) {
  auto t = table({"x"}, 5, 2);
  EXPECT_EQ(t.coefficients.at({0}), CyclotomicNumber(Q(4, 5)));
  EXPECT_EQ(t.coefficients.at({1}), CyclotomicNumber(Q(4, 25)));
  EXPECT_EQ(t.coefficients.at({2}), CyclotomicNumber(Q(4, 125)));
  EXPECT_TRUE(table({"x"}, 5, 1, {2}).coefficients.at({0}).is_zero());
  EXPECT_EQ(table({"x", "y"}, 5, 1).coefficients.at({0, 0}), CyclotomicNumber(Q(16, 25)));
}

TEST(Oracle, AgreesWithClosedForm) {
  auto g = resolve_all({"y^2-x^3"});
  auto rg = reduce_mod_p(g, 7);
  for (long e : {0, 1, 3}) {
    auto chi = CharacterTuple::make(7, {e});
    auto cmp = compare_with_closed_form(denef_zeta(rg, chi, ResidualFunction::unit_ball()), table({"y^2-x^3"}, 7, 3, {e}));
    EXPECT_TRUE(cmp.equal) << cmp.to_text();
  }
  auto m = resolve_all({"x^2*y^3"});
  auto cmp = compare_with_closed_form(
      denef_zeta(reduce_mod_p(m, 5), CharacterTuple::trivial(5, 1), ResidualFunction::unit_ball()),
      table({"x^2*y^3"}, 5, 4));
  EXPECT_TRUE(cmp.equal) << cmp.to_text();
}

TEST(Oracle, CorruptedCoefficientIsCaught) {
  auto g = resolve_all({"y^2-x^3"});
  auto rg = reduce_mod_p(g, 7);
  for (auto& [key, n] : rg.census)
    if (key.I == std::vector<int>{0}) {
      ++n;
      break;
    }
  auto cmp = compare_with_closed_form(
      denef_zeta(rg, CharacterTuple::trivial(7, 1), ResidualFunction::unit_ball()), table({"y^2-x^3"}, 7, 3));
  ASSERT_FALSE(cmp.equal);
  EXPECT_EQ(*cmp.k, Exponents{1});
}

TEST(Oracle, MonomialReference) {
  auto Z = monomial_zeta_reference({{1}}, 5);
  EXPECT_TRUE(Z.fn.equals(RationalFunctionT(5, PolyC::constant(1, CyclotomicNumber(Q(4, 5))),
                                             {{DenominatorFactor{1, {1}}, 1}})));
  auto g = resolve_all({"x", "x*y"});
  auto denef = denef_zeta(reduce_mod_p(g, 5), CharacterTuple::trivial(5, 2), ResidualFunction::unit_ball());
  EXPECT_TRUE(monomial_zeta_reference({{1, 1}, {0, 1}}, 5).fn.equals(denef.fn));
  for (const auto& [F, a] : std::vector<std::pair<std::vector<std::string>, std::vector<std::vector<int>>>>{
           {{"x^2*y^3"}, {{2}, {3}}}, {{"x*y"}, {{1}, {1}}}, {{"x", "y"}, {{1, 0}, {0, 1}}}}) {
    auto cmp = compare_with_closed_form(monomial_zeta_reference(a, 5), table(F, 5, 3));
    EXPECT_TRUE(cmp.equal) << F.front() << ": " << cmp.to_text();
  }
}

TEST(Oracle, RefinementIsStable) {
  auto lo = table({"y^2-x^3"}, 5, 2, {2}, ResidualFunction::origin_class());
  auto hi = table({"y^2-x^3"}, 5, 3, {2}, ResidualFunction::origin_class());
  for (const auto& [k, v] : lo.coefficients) EXPECT_EQ(hi.coefficients.at(k), v);
}

TEST(Oracle, MeasureBound) {
  for (const auto& F : std::vector<std::vector<std::string>>{{"y^2-x^3"}, {"x", "x*y"}}) {
    auto t = table(F, 5, 3);
    Rational total;
    for (const auto& [k, v] : t.coefficients) {
      ASSERT_TRUE(v.is_rational());
      EXPECT_GE(*v.as_rational(), Q(0));
      total += *v.as_rational();
    }
    EXPECT_LE(total, Q(1));
  }
}

TEST(Oracle, ShardingDoesNotChangeTheResult) {
  std::vector<PolyQ> F{P("y^2-x^3")};
  OracleOptions base;
  base.bound = 2;
  auto whole = enumerate_histogram(F, 7, base);
  for (unsigned shards : {2u, 3u, 7u, 10u})
    for (unsigned threads : {1u, 3u}) {
      OracleOptions o = base;
      o.shards = shards;
      o.threads = threads;
      EXPECT_EQ(enumerate_histogram(F, 7, o), whole) << shards << " shards, " << threads << " threads";
    }
  OracleHistogram sum = enumerate_shard(F, 7, 2, {0, 1, 2});
  sum += enumerate_shard(F, 7, 2, {3, 4, 5, 6});
  EXPECT_EQ(sum, whole);
}

TEST(Oracle, BudgetAndDenominators) {
  OracleOptions o;
  o.bound = 5;
  EXPECT_THROW(enumerate_histogram({P("x")}, 7, o), BudgetExceeded);
  o.bound = 1;
  EXPECT_THROW(enumerate_histogram({P("x/5")}, 5, o), BadPrime);
}

}  // namespace
}  // namespace igusa
