#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "igusa/algebra/cyclotomic.hpp"
#include "igusa/algebra/factor.hpp"
#include "igusa/algebra/rational_function.hpp"
#include "igusa/algebra/smith.hpp"
#include "igusa/algebra/solve.hpp"
#include "igusa/errors.hpp"

namespace igusa {
namespace {

using testing::P;
using testing::Q;

TEST(Rational, ParseAndArithmetic) {
  EXPECT_EQ(Rational::parse("-6/4"), Q(-3, 2));
  EXPECT_EQ(Q(1, 3) + Q(1, 6), Q(1, 2));
  EXPECT_EQ(pow(Q(2, 3), -2), Q(9, 4));
  EXPECT_EQ(valuation(Q(50, 3), 5), 2);
  EXPECT_EQ(valuation(Q(2, 25), 5), -2);
  EXPECT_EQ(residue(Q(1, 3), 7), 5);
  EXPECT_THROW(residue(Q(1, 3), 3), std::domain_error);
}

TEST(Polynomial, ExactDivisionAndRemainder) {
  PolyQ f = P("x^2 - y^2");
  EXPECT_EQ(exact_div(f, P("x - y")), P("x + y"));
  EXPECT_THROW(exact_div(f, P("x - 2*y")), NotDivisible);
  EXPECT_TRUE(binomial_divide(P("1 - y^4/16"), P("1 - y^2/4")).has_value());
  EXPECT_FALSE(binomial_divide(P("1 - y/4"), P("1 - y^2/4")).has_value());
}

TEST(Polynomial, ComposeAndDerivative) {
  PolyQ f = P("y^2 - x^3");
  std::vector<PolyQ> chart{P("x"), P("x*y")};
  EXPECT_EQ(f.compose(chart), P("x^2*y^2 - x^3"));
  EXPECT_EQ(f.derivative(0), P("-3*x^2"));
  EXPECT_EQ(f.order(), 2);
  EXPECT_EQ(f.total_degree(), 3);
}

TEST(Parse, GrammarAndErrors) {
  EXPECT_EQ(P("(x+1)^2"), P("x^2 + 2*x + 1"));
  EXPECT_EQ(P("3x y"), P("3*x*y"));
  EXPECT_EQ(P("x/2"), Rational(1, 2) * P("x"));
  EXPECT_EQ(P("-x + -2*y"), P("-(x + 2*y)"));
  EXPECT_THROW(P("xy"), ParseError);
  EXPECT_THROW(P("x^-1"), ParseError);
  EXPECT_THROW(P("1/x"), ParseError);
  EXPECT_THROW(P("(x"), ParseError);
}

TEST(Univariate, GcdAndSquarefree) {
  UPolyQ a({Q(-1), Q(0), Q(1)});         // x^2 - 1
  UPolyQ b({Q(1), Q(2), Q(1)});          // (x+1)^2
  EXPECT_EQ(gcd(a, b), UPolyQ({Q(1), Q(1)}));
  auto sq = squarefree_decomposition(a * b);  // (x-1)(x+1)^3
  ASSERT_EQ(sq.size(), 2u);
  EXPECT_EQ(sq[0].second, 1);
  EXPECT_EQ(sq[1].second, 3);
  auto e = extended_gcd(a, UPolyQ({Q(2), Q(1)}));
  EXPECT_EQ(e.s * a + e.t * UPolyQ({Q(2), Q(1)}), e.g);
}

TEST(Factor, Univariate) {
  auto f = factor(UPolyQ({Q(-2), Q(0), Q(0), Q(0), Q(2)}));  // 2x^4 - 2
  EXPECT_EQ(f.unit, Q(2));
  ASSERT_EQ(f.factors.size(), 3u);
  EXPECT_EQ(f.factors[2].first, UPolyQ({Q(1), Q(0), Q(1)}));
  // Swinnerton-Dyer style polynomial irreducible over Q: x^4 - 10x^2 + 1
  EXPECT_EQ(factor(UPolyQ({Q(1), Q(0), Q(-10), Q(0), Q(1)})).factors.size(), 1u);
}

TEST(Factor, Bivariate) {
  EXPECT_EQ(factor(P("y^2 - x^3")).factors.size(), 1u);
  auto f = factor(P("x^3*y - x*y^3"));
  ASSERT_EQ(f.factors.size(), 4u);
  PolyQ prod = PolyQ::constant(2, f.unit);
  for (const auto& [h, m] : f.factors) prod = prod * pow(h, m);
  EXPECT_EQ(prod, P("x^3*y - x*y^3"));
  auto g = factor(P("x^2*y^3"));
  ASSERT_EQ(g.factors.size(), 2u);
  EXPECT_EQ(g.factors[0].second + g.factors[1].second, 5);
  EXPECT_EQ(factor(P("x^2 - 2*y^2")).factors.size(), 1u);
}

TEST(Factor, RandomProductsReassemble) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 15; ++trial) {
    PolyQ a = P("x") * Rational(c(rng)) + P("y") + PolyQ::constant(2, Rational(c(rng)));
    PolyQ b = P("y^2") + P("x") * Rational(c(rng)) + PolyQ::constant(2, Rational(c(rng)));
    PolyQ f = a * b;
    auto fac = factor(f);
    PolyQ prod = PolyQ::constant(2, fac.unit);
    for (const auto& [h, m] : fac.factors) prod = prod * pow(h, m);
    EXPECT_EQ(prod, f) << f.to_string();
    EXPECT_GE(fac.factors.size(), 2u);
  }
}

TEST(Solve, ResultantAndCommonZeros) {
  PolyQ f = P("y^2 - x^3"), g = P("x - y");
  std::vector<PolyQ> sys{f, g};
  auto z = rational_common_zeros(sys);
  ASSERT_EQ(z.size(), 2u);
  EXPECT_EQ(z[0], (RationalPoint{Q(0), Q(0)}));
  EXPECT_EQ(z[1], (RationalPoint{Q(1), Q(1)}));
  std::vector<PolyQ> irr{P("x^2 - 2"), P("y")};
  EXPECT_THROW(rational_common_zeros(irr), IrrationalSolution);
  UPolyQ r = resultant(P("x^2 + y^2 - 1"), P("x - y"), 0);
  EXPECT_EQ(r.monic(), UPolyQ({Q(-1, 2), Q(0), Q(1)}));
}

TEST(Cyclotomic, Arithmetic) {
  auto z6 = CyclotomicNumber::root_of_unity(6, 1);
  EXPECT_EQ(z6 * z6 * z6, CyclotomicNumber(-1));
  EXPECT_EQ(z6 * z6 - z6, CyclotomicNumber(-1));  // z^2 - z + 1 = 0
  auto i = CyclotomicNumber::root_of_unity(4, 1);
  EXPECT_EQ((i * z6).conductor(), 12u);
  EXPECT_EQ((i * z6) * (i * z6).inverse(), CyclotomicNumber(1));
  std::vector<Rational> all(6, Q(1));
  EXPECT_TRUE(CyclotomicNumber::from_exponent_counts(6, all).is_zero());
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
}

TEST(Smith, Examples) {
  auto s = smith_normal_form(IntegerMatrix(1, 2, {2, 6}));
  EXPECT_EQ(s.rank, 1u);
  EXPECT_EQ(s.invariant_factors, std::vector<BigInt>{2});
  IntegerMatrix A(3, 3, {2, 4, 4, -6, 6, 12, 10, -4, -16});
  auto t = smith_normal_form(A);
  EXPECT_EQ(t.U * A * t.V, t.D);
  EXPECT_EQ(t.invariant_factors, (std::vector<BigInt>{2, 6, 12}));
}

TEST(RationalFunction, TaylorOfGeometricFactor) {
  // (1 - 1/5) / (1 - t/5)
  RationalFunctionT Z(5, PolyC::constant(1, CyclotomicNumber(Q(4, 5))), {{DenominatorFactor{1, {1}}, 1}});
  auto c = taylor_coefficients(Z, 2);
  EXPECT_EQ(c.at({0}), CyclotomicNumber(Q(4, 5)));
  EXPECT_EQ(c.at({1}), CyclotomicNumber(Q(4, 25)));
  EXPECT_EQ(c.at({2}), CyclotomicNumber(Q(4, 125)));
  RationalFunctionT W = Z + Z;
  EXPECT_EQ(W.denominator().size(), 1u);
  EXPECT_TRUE((Z * Z).equals(RationalFunctionT(5, PolyC::constant(1, CyclotomicNumber(Q(16, 25))),
                                                {{DenominatorFactor{1, {1}}, 2}})));
}

}  // namespace
}  // namespace igusa
