#include <gtest/gtest.h>

#include "brauer/errors.hpp"
#include "brauer/ff/genus.hpp"
#include "support.hpp"

namespace brauer::ff {
namespace {

using arith::PolyQ;
using testing::fp;
using testing::Gen;

RationalFunctionFp F(std::uint64_t p, std::vector<std::int64_t> num, std::vector<std::int64_t> den = {1}) {
  return RationalFunctionFp(fp(p, num), fp(p, den));
}

RationalFunctionQ Fq(std::vector<long> num) {
  std::vector<Rational> c;
  for (long v : num) c.emplace_back(v);
  return RationalFunctionQ(PolyQ(c));
}

FFPlaceFp W(std::uint64_t p, std::vector<std::int64_t> c) { return FFPlaceFp::finite(fp(p, c)); }

std::vector<FFPlaceFp> sorted(std::vector<FFPlaceFp> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Ramified places by brute force: all places of degree <= 3 plus those of
/// the entries, each decided by enumerating n-th powers of the residue field.
std::vector<FFPlaceFp> brute_ram(const SymbolAlgebraFp& D) {
  auto places = testing::all_places_upto(D.characteristic(), 3);
  for (const auto& f : {D.a(), D.b()})
    for (const auto& pv : places_of(f)) places.push_back(pv.place);
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());
  std::vector<FFPlaceFp> out;
  for (const auto& w : places) {
    const auto t = tame_symbol<arith::PolyFp>(D, w);
    const auto m = residue_modulus(w, D.a().num());
    if (!testing::brute_is_power(t, m, D.degree())) out.push_back(w);
  }
  return out;
}

TEST(RationalFunction, NormalizesAndDividesExactly) {
  const auto f = F(5, {4, 0, 1}, {3, 1});  // (x^2 - 1)/(x - 2) over F5
  const auto g = F(5, {1, 1});
  EXPECT_EQ((f * g / g), f);
  EXPECT_EQ(F(5, {2, 2}, {1, 1}), F(5, {2}));
  EXPECT_THROW(F(5, {1}, {0}), DomainError);
  EXPECT_THROW(F(5, {0}).inverse(), DomainError);
}

TEST(Places, FiniteRequiresMonicIrreducible) {
  EXPECT_THROW(W(3, {2, 0, 1}), DomainError);
  EXPECT_THROW(W(3, {1, 2}), DomainError);
  EXPECT_EQ(W(3, {1, 0, 1}).degree(), 2);
  EXPECT_EQ(FFPlaceFp::infinity().degree(), 1);
}

TEST(PlacesOf, SpecExamples) {
  const auto x = places_of(F(3, {0, 1}));
  ASSERT_EQ(x.size(), 2u);
  EXPECT_EQ(x[0].place, W(3, {0, 1}));
  EXPECT_EQ(x[0].valuation, 1);
  EXPECT_TRUE(x[1].place.is_infinite());
  EXPECT_EQ(x[1].valuation, -1);

  const auto f = places_of(F(3, {1, 0, 1}, {0, 1}));
  std::map<std::string, int> got;
  for (const auto& pv : f) got[pv.place.str()] = pv.valuation;
  EXPECT_EQ(got, (std::map<std::string, int>{{"x^2 + 1", 1}, {"x", -1}, {"inf", -1}}));

  EXPECT_TRUE(places_of(F(7, {3})).empty());
}

TEST(Valuation, InfinityMatchesTheChart) {
  Gen g(51);
  for (int i = 0; i < 200; ++i) {
    const auto f = g.function(5, 5);
    const auto chart = at_infinity_chart(f);
    EXPECT_EQ(valuation(f, FFPlaceFp::infinity()), valuation(chart, W(5, {0, 1})));
    EXPECT_EQ(valuation(f, FFPlaceFp::infinity()), f.den().degree() - f.num().degree());
  }
  EXPECT_THROW(valuation(F(5, {0}), W(5, {0, 1})), ZeroValuationError);
}

TEST(DegreeSum, PrincipalDivisorsHaveDegreeZero) {
  Gen g(52);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[static_cast<std::size_t>(g.range(0, 3))];
    const auto f = g.function(p, 6);
    long sum = 0;
    for (const auto& pv : places_of(f)) sum += static_cast<long>(pv.valuation) * pv.place.degree();
    ASSERT_EQ(sum, 0) << f.str();
  }
}

TEST(TameResidue, SpecExamples) {
  const SymbolAlgebraFp D(2, F(3, {0, 1}), F(3, {0, 1}));
  const auto at_x = tame_residue(D, W(3, {0, 1}));
  EXPECT_EQ(at_x.symbol, fp(3, {2}));
  EXPECT_FALSE(at_x.unramified());
  EXPECT_EQ(at_x.character_order, 2u);

  const auto at_x1 = tame_residue(D, W(3, {1, 1}));
  EXPECT_TRUE(at_x1.symbol.is_one());
  EXPECT_TRUE(at_x1.unramified());

  Gen g(53);
  for (int i = 0; i < 50; ++i) {
    const long c = g.range(1, 6);
    const SymbolAlgebraFp S(2, F(7, {c * c}), g.function(7, 4));
    EXPECT_TRUE(ram_V(S).empty()) << S.str();
  }
}

TEST(SymbolAlgebra, Preconditions) {
  EXPECT_THROW(SymbolAlgebraFp(3, F(3, {0, 1}), F(3, {1, 1})), DomainError);
  EXPECT_THROW(SymbolAlgebraFp(2, F(3, {0}), F(3, {1, 1})), DomainError);
  EXPECT_THROW(SymbolAlgebraFp(2, F(3, {0, 1}), F(5, {1, 1})), DomainError);
}

TEST(RamV, SpecExamples) {
  EXPECT_EQ(ram_V(SymbolAlgebraFp(2, F(3, {0, 1}), F(3, {0, 1}))),
            (std::vector<FFPlaceFp>{W(3, {0, 1}), FFPlaceFp::infinity()}));
  for (std::uint64_t p : {3u, 5u, 7u, 11u})
    EXPECT_TRUE(ram_V(SymbolAlgebraFp(2, F(p, {0, 1}), F(p, {1, static_cast<std::int64_t>(p) - 1}))).empty());
  // -1 is a non-square mod 7.
  EXPECT_EQ(testing::brute_legendre(-1, 7), -1);
  EXPECT_EQ(ram_V(SymbolAlgebraFp(2, F(7, {6}), F(7, {0, 1}))),
            (std::vector<FFPlaceFp>{W(7, {0, 1}), FFPlaceFp::infinity()}));
}

TEST(RamV, ConstantEntriesNeverRamify) {
  for (std::uint64_t p : {3u, 5u, 7u})
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a)
      for (std::int64_t b = 1; b < static_cast<std::int64_t>(p); ++b)
        EXPECT_TRUE(ram_V(SymbolAlgebraFp(2, F(p, {a}), F(p, {b}))).empty());
}

TEST(RamV, CandidatesContainEveryRamifiedPlace) {
  Gen g(54);
  for (std::uint64_t p : {3u, 5u}) {
    for (int i = 0; i < 40; ++i) {
      const SymbolAlgebraFp D(2, g.function(p, 3), g.function(p, 3));
      EXPECT_EQ(sorted(ram_V(D)), brute_ram(D)) << D.str();
    }
  }
}

TEST(RamV, HigherDegreeSymbolsAgreeWithBruteForce) {
  Gen g(55);
  for (int i = 0; i < 30; ++i) {
    const SymbolAlgebraFp D(3, g.function(7, 2), g.function(7, 2));
    EXPECT_EQ(sorted(ram_V(D)), brute_ram(D)) << D.str();
  }
}

TEST(RamV, SteinbergSymbolsSplit) {
  Gen g(56);
  for (std::uint64_t p : {3u, 5u, 7u}) {
    for (int i = 0; i < 100; ++i) {
      const auto f = g.function(p, 4);
      const auto one_minus = RationalFunctionFp(fp(p, {1})) - f;
      if (f.is_constant() || one_minus.is_zero()) continue;
      EXPECT_TRUE(ram_V(SymbolAlgebraFp(2, f, one_minus)).empty()) << f.str();
    }
  }
}

TEST(Residue, IsBimultiplicative) {
  Gen g(57);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t p = g.coin() ? 3 : 5;
    const auto a1 = g.function(p, 3), a2 = g.function(p, 3), b = g.function(p, 3);
    const SymbolAlgebraFp D1(2, a1, b), D2(2, a2, b), D12(2, a1 * a2, b);
    for (const auto& w : candidate_places(D12)) {
      const auto m = residue_modulus(w, b.num());
      const auto t1 = tame_symbol<arith::PolyFp>(D1, w), t2 = tame_symbol<arith::PolyFp>(D2, w);
      ASSERT_EQ(tame_symbol<arith::PolyFp>(D12, w), t1 * t2 % m) << D12.str() << " at " << w.str();
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Residue, RamifiedCountIsEvenForQuaternions) {
  Gen g(58);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[static_cast<std::size_t>(g.range(0, 2))];
    const SymbolAlgebraFp D(2, g.function(p, 3), g.function(p, 3));
    EXPECT_EQ(ram_V(D).size() % 2, 0u) << D.str();
  }
}

TEST(GenusBound, SpecExamples) {
  const auto b = genus_bound(SymbolAlgebraFp(2, F(3, {0, 1}), F(3, {0, 1})));
  EXPECT_EQ(b.ramified_places, 2u);
  EXPECT_EQ(b.report.bound, 1);
  EXPECT_EQ(b.report.factor("phi_power").value, 1);
  EXPECT_EQ(b.report.factor("unramified_order").value, 1);

  const SymbolAlgebraFp D3(3, F(7, {0, 1}), F(7, {3}));  // 3 is not a cube mod 7
  const auto b3 = genus_bound(D3);
  EXPECT_EQ(b3.report.bound, arith::ipow(2, ram_V(D3).size()));
  EXPECT_GT(b3.ramified_places, 0u);

  EXPECT_EQ(genus_bound(SymbolAlgebraQ(2, Fq({0, 1}), Fq({1, 1}))).report.bound, 1);
  EXPECT_EQ(genus_bound(D3, Integer(5)).report.bound, 5 * arith::ipow(2, ram_V(D3).size()));
  EXPECT_THROW(genus_bound(D3, Integer(0)), DomainError);
  EXPECT_THROW(genus_bound(SymbolAlgebraQ(3, Fq({0, 1}), Fq({1, 1}))), UnsupportedError);
}

TEST(RamVOverQ, SpecExamples) {
  const auto xx = ram_V_over_Q(SymbolAlgebraQ(2, Fq({0, 1}), Fq({0, 1})));
  ASSERT_EQ(xx.size(), 2u);
  EXPECT_EQ(xx[0].place.str(), "x");
  EXPECT_TRUE(xx[1].place.is_infinite());
  for (const auto& v : xx) {
    EXPECT_TRUE(v.ramified);
    EXPECT_EQ(v.certainty, Certainty::Proven);
  }

  const SymbolAlgebraQ D(2, Fq({-1, 1}), Fq({1, 1}));
  const auto at = tame_residue_q(D, FFPlaceQ::finite(PolyQ({Rational(-1), Rational(1)})));
  EXPECT_EQ(at.symbol, PolyQ::constant(Rational(1, 2)));
  EXPECT_TRUE(at.ramified);
  EXPECT_EQ(at.certainty, Certainty::Proven);

  EXPECT_TRUE(ram_V_over_Q(SymbolAlgebraQ(2, Fq({9}), Fq({1, 3, 0, 1}))).empty());
}

TEST(RamVOverQ, QuadraticPlacesAreDecidedExactly) {
  const auto pi = FFPlaceQ::finite(PolyQ({Rational(1), Rational(0), Rational(1)}));
  const auto residue_at = [&](long b) { return tame_residue_q(SymbolAlgebraQ(2, Fq({1, 0, 1}), Fq({b})), pi); };
  EXPECT_FALSE(residue_at(-1).ramified);  // -1 = i^2
  EXPECT_TRUE(residue_at(3).ramified);
  EXPECT_FALSE(residue_at(-4).ramified);
  EXPECT_TRUE(residue_at(2).ramified);
  const auto half_i = tame_residue_q(SymbolAlgebraQ(2, Fq({1, 0, 1}), Fq({0, 2})), pi);
  EXPECT_FALSE(half_i.ramified);  // 1/(2i) = -i/2 = ((1 - i)/2)^2
  for (const auto& r : {residue_at(-1), residue_at(3), half_i}) EXPECT_EQ(r.certainty, Certainty::Proven);
}

TEST(RamVOverQ, HigherDegreeUsesWitnessPrimes) {
  const auto pi = FFPlaceQ::finite(PolyQ({Rational(-2), Rational(0), Rational(0), Rational(1)}));
  const auto cube = tame_residue_q(SymbolAlgebraQ(2, Fq({-2, 0, 0, 1}), Fq({0, 1})), pi);
  EXPECT_TRUE(cube.ramified);  // 1/cbrt(2) is not a square: its norm 1/2 is not
  EXPECT_TRUE(cube.witness_prime.has_value());

  const auto pi4 = FFPlaceQ::finite(PolyQ({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)}));
  const auto two = tame_residue_q(SymbolAlgebraQ(2, Fq({1, 0, 0, 0, 1}), Fq({2})), pi4);
  EXPECT_FALSE(two.ramified);  // sqrt(2) = zeta8 + zeta8^7 lies in Q(zeta8)
  EXPECT_EQ(two.certainty, Certainty::UnresolvedSquare);
}

TEST(RamVOverQ, OnlyQuaternions) {
  EXPECT_THROW(ram_V_over_Q(SymbolAlgebraQ(3, Fq({0, 1}), Fq({1, 1}))), UnsupportedError);
}

}  // namespace
}  // namespace brauer::ff
