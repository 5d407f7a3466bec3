#include <gtest/gtest.h>

#include <random>

#include "common.hpp"
#include "igusa/algebra/univariate.hpp"
#include "igusa/monodromy.hpp"

namespace igusa {
namespace {

using testing::Q;
using testing::resolve_all;

MonodromyBasePoint find_point(const ResolutionGraph& g, MonodromyBasePoint::Kind kind) {
  for (const auto& b : monodromy_base_points(g))
    if (b.kind == kind) return b;
  throw std::logic_error("no such base point");
}

// numerator and denominator of an r = 1 monodromy zeta
std::pair<UPolyQ, UPolyQ> as_fraction(const MonodromyZeta& z) {
  UPolyQ num({Q(1)}), den({Q(1)});
  for (const auto& [N, e] : z.factors) {
    std::vector<Rational> c(static_cast<std::size_t>(N[0]) + 1, Q(0));
    c[0] = -1;
    c.back() = 1;
    for (long k = 0; k < std::abs(e); ++k) (e > 0 ? num : den) = (e > 0 ? num : den) * UPolyQ(c);
  }
  return {num, den};
}

TEST(SabbahZeta, ClassicalExamples) {
  auto cusp = resolve_all({"y^2-x^3"});
  auto [n, d] = as_fraction(sabbah_zeta(cusp, find_point(cusp, MonodromyBasePoint::Kind::Blown)));
  // (t^2 - t + 1) / (t - 1)
  EXPECT_EQ(n * UPolyQ({Q(-1), Q(1)}), d * UPolyQ({Q(1), Q(-1), Q(1)}));

  auto x = resolve_all({"x"});
  auto zx = sabbah_zeta(x, find_point(x, MonodromyBasePoint::Kind::Smooth));
  ASSERT_EQ(zx.factors.size(), 1u);
  EXPECT_EQ(zx.factors[0], (std::pair<std::vector<int>, long>{{1}, -1}));

  auto node = resolve_all({"x*y"});
  EXPECT_TRUE(sabbah_zeta(node, find_point(node, MonodromyBasePoint::Kind::Crossing)).factors.empty());
}

TEST(Support, BoundsAndCertificates) {
  auto cusp = resolve_all({"y^2-x^3"});
  auto origin = find_point(cusp, MonodromyBasePoint::Kind::Blown);
  auto bound = alexander_support_bound(cusp, origin);
  EXPECT_EQ(bound.size(), 6u);
  for (long k = 0; k < 6; ++k) EXPECT_TRUE(bound.count(TranslatedCotorus::make({1}, Q(k, 6))));
  auto cert = support_certificate(cusp, origin);
  std::map<Rational, long> got;
  for (const auto& c : cert) got[c.cotorus.tau] = c.exponent;
  EXPECT_EQ(got, (std::map<Rational, long>{{Q(0), -1}, {Q(1, 6), 1}, {Q(5, 6), 1}}));

  auto xy = resolve_all({"x", "y"});
  auto b2 = alexander_support_bound(xy, find_point(xy, MonodromyBasePoint::Kind::Crossing));
  EXPECT_EQ(b2, (std::set<TranslatedCotorus>{TranslatedCotorus::make({1, 0}, Q(0)),
                                              TranslatedCotorus::make({0, 1}, Q(0))}));
  auto node = resolve_all({"x*y"});
  EXPECT_TRUE(support_certificate(node, find_point(node, MonodromyBasePoint::Kind::Crossing)).empty());
  auto x = resolve_all({"x"});
  auto cx = support_certificate(x, find_point(x, MonodromyBasePoint::Kind::Smooth));
  ASSERT_EQ(cx.size(), 1u);
  EXPECT_EQ(cx[0].exponent, -1);
}

TEST(Support, CertificatesWithinBounds) {
  for (const auto& entry : testing::corpus()) {
    auto g = resolve_all(entry.polys);
    for (const auto& b : monodromy_base_points(g)) {
      auto bound = alexander_support_bound(g, b);
      for (const auto& c : support_certificate(g, b)) EXPECT_TRUE(bound.count(c.cotorus)) << entry.name;
    }
  }
}

TEST(Cotori, FromHyperplanes) {
  auto h = hyperplane_cotori(Hyperplane::normalized({6}, 5));
  EXPECT_EQ(h.content, 6);
  EXPECT_EQ(h.residue, Q(1));
  EXPECT_TRUE(h.contains(FiniteOrderCharacter::make({Q(1, 6)})));
  EXPECT_FALSE(h.contains(FiniteOrderCharacter::make({Q(1, 2)})));
  EXPECT_EQ(h.components().front(), TranslatedCotorus::make({1}, Q(1, 6)));
  auto one = hyperplane_cotori(Hyperplane::normalized({1}, 1));
  EXPECT_TRUE(one.contains(FiniteOrderCharacter::make({Q(0)})));
  EXPECT_FALSE(one.contains(FiniteOrderCharacter::make({Q(1, 3)})));
  auto diag = hyperplane_cotori(Hyperplane::normalized({1, 1}, 2));
  EXPECT_TRUE(diag.contains(FiniteOrderCharacter::make({Q(1, 3), Q(2, 3)})));
  EXPECT_FALSE(diag.contains(FiniteOrderCharacter::make({Q(1, 3), Q(1, 3)})));
}

TEST(Cotori, UnivariateHyperplaneIsExpOfRealPart) {
  for (int N = 1; N <= 12; ++N)
    for (long nu = 1; nu <= 12; ++nu) {
      auto c = hyperplane_cotori(Hyperplane::normalized({N}, nu)).components().front();
      EXPECT_EQ(c.N, std::vector<int>{1});
      EXPECT_EQ(c.tau, FiniteOrderCharacter::make({Q(-nu, N)}).a[0]);
    }
}

TEST(Cotori, Closure) {
  auto z = TranslatedCotorus::make({1}, Q(1, 6));
  auto c = cotorus_closure(z);
  EXPECT_EQ(c.size(), 6u);
  EXPECT_NE(std::find(c.begin(), c.end(), z), c.end());
  EXPECT_EQ(cotorus_closure(c), c);
  auto t = TranslatedCotorus::make({2, 1}, Q(0));
  EXPECT_EQ(cotorus_closure(t), std::vector<TranslatedCotorus>{t});
  auto u = cotorus_closure(std::vector<TranslatedCotorus>{z, TranslatedCotorus::make({1}, Q(1, 4))});
  EXPECT_EQ(u.size(), 8u);  // sixths and quarters share 0 and 1/2
}

TEST(Stalk, Examples) {
  auto a = local_stalk_data(IntegerMatrix(1, 1, {2}), 7);
  EXPECT_EQ(a.lattice_rank, 0u);
  EXPECT_EQ(*a.component_count, 2);
  EXPECT_EQ(a.stalk_ranks, std::vector<BigInt>{2});
  auto b = local_stalk_data(IntegerMatrix(1, 2, {2, 6}), 7);
  EXPECT_EQ(b.lattice_rank, 1u);
  EXPECT_EQ(*b.tame_count, 2);
  EXPECT_EQ(b.stalk_ranks, (std::vector<BigInt>{2, 2}));
  EXPECT_EQ(b.gcd_product, 12);
  auto c = local_stalk_data(IntegerMatrix::identity(2), 5);
  EXPECT_EQ(c.lattice_rank, 0u);
  EXPECT_EQ(c.stalk_ranks, std::vector<BigInt>{1});
  auto d = local_stalk_data(IntegerMatrix(1, 1, {14}), 7);
  EXPECT_EQ(*d.component_count, 14);
  EXPECT_EQ(*d.tame_count, 2);
  auto e = local_stalk_data(IntegerMatrix(2, 1, {1, 2}), 5);
  EXPECT_FALSE(e.component_count.has_value());
}

TEST(Stalk, AlternatingSum) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> entry(0, 6);
  std::uniform_int_distribution<int> dim(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = static_cast<std::size_t>(dim(rng)), C = static_cast<std::size_t>(dim(rng));
    std::vector<long> v(r * C);
    for (auto& x : v) x = entry(rng);
    auto s = local_stalk_data(IntegerMatrix(r, C, v), 7);
    if (!s.tame_count) continue;
    BigInt alt = 0;
    for (std::size_t q = 0; q < s.stalk_ranks.size(); ++q) alt += (q % 2 ? -1 : 1) * s.stalk_ranks[q];
    EXPECT_EQ(alt, s.lattice_rank == 0 ? *s.tame_count : BigInt(0));
  }
}

TEST(Conjectures, MonodromyOnCusp) {
  auto g = resolve_all({"y^2-x^3"});
  auto Z = denef_zeta(reduce_mod_p(g, 7), CharacterTuple::trivial(7, 1), ResidualFunction::unit_ball());
  auto report = check_monodromy_conjecture(g, Z);
  ASSERT_EQ(report.hyperplanes.size(), 2u);
  EXPECT_TRUE(report.all_verified());
  const auto& h = report.hyperplanes[1];
  EXPECT_EQ(h.H.to_string(), "6s+5");
  EXPECT_EQ(h.exponent, 1);
  ASSERT_EQ(h.w.size(), 1u);
  EXPECT_EQ(h.w[0].w, -1);
  EXPECT_EQ(h.w[0].component, std::vector<int>{3});
  EXPECT_NE(report.hyperplanes[0].base.find("generic point"), std::string::npos);
}

TEST(Conjectures, MonodromyOnCoordinates) {
  auto g = resolve_all({"x", "y"});
  auto Z = denef_zeta(reduce_mod_p(g, 5), CharacterTuple::trivial(5, 2), ResidualFunction::unit_ball());
  auto report = check_monodromy_conjecture(g, Z);
  EXPECT_EQ(report.hyperplanes.size(), 2u);
  EXPECT_TRUE(report.all_verified());
}

TEST(Conjectures, Holomorphy) {
  auto g = resolve_all({"y^2-x^3"});
  auto r7 = check_holomorphy_conjecture(g, {CharacterTuple::trivial(7, 1), CharacterTuple::make(7, {3})}, 7);
  EXPECT_TRUE(r7.all_verified());
  EXPECT_FALSE(r7.characters[1].holomorphic);
  EXPECT_EQ(r7.characters[1].divisor, 3);
  auto r5 = check_holomorphy_conjecture(g, {CharacterTuple::make(5, {1})}, 5);
  EXPECT_TRUE(r5.characters[0].holomorphic);
  EXPECT_TRUE(r5.all_verified());
}

}  // namespace
}  // namespace igusa
