#include <gtest/gtest.h>

#include "brauer/elliptic/bound.hpp"
#include "brauer/errors.hpp"
#include "brauer/quat/quaternion.hpp"
#include "support.hpp"

namespace brauer::elliptic {
namespace {

using testing::Gen;
using testing::Inf;
using testing::P;

ExceptionalSet set_of(std::vector<PlaceQ> places) {
  ExceptionalSet S;
  for (const auto& v : places) S.add(v, PlaceTag::UserAdded);
  return S;
}

TEST(Discriminant, SpecExamples) {
  EXPECT_EQ(cubic_discriminant(0, -1, 0), 4);
  EXPECT_EQ(cubic_discriminant(0, 0, 0), 0);
  EXPECT_EQ(cubic_discriminant(0, -3, 2), 0);
  EXPECT_EQ(discriminant(arith::PolyQ({Rational(0), Rational(-1), Rational(0), Rational(1)})), 4);
  EXPECT_THROW(discriminant(arith::PolyQ({Rational(0), Rational(1), Rational(2)})), DomainError);
}

TEST(Discriminant, EqualsSquaredRootDifferences) {
  Gen g(61);
  for (int i = 0; i < 1000; ++i) {
    const Rational a = g.rational(40), b = g.rational(40), c = g.rational(40);
    if (a == b || b == c || a == c) continue;
    const auto E = WeierstrassCurve::from_roots(a, b, c);
    const Rational want = (a - b) * (a - b) * (b - c) * (b - c) * (a - c) * (a - c);
    ASSERT_EQ(E.discriminant(), want);
    ASSERT_EQ(E.discriminant(), cubic_discriminant(E.alpha(), E.beta(), E.gamma()));
  }
}

TEST(Curve, CoefficientAndRootFormsAgree) {
  const auto E = WeierstrassCurve::from_coefficients(0, -1, 0);
  EXPECT_EQ(E.roots(), (std::array<Rational, 3>{-1, 0, 1}));
  for (const auto& r : E.roots()) EXPECT_TRUE(E.cubic().eval(r).is_zero());
  Gen g(62);
  for (int i = 0; i < 200; ++i) {
    const Rational a = g.rational(20), b = g.rational(20), c = g.rational(20);
    if (a == b || b == c || a == c) continue;
    const auto R = WeierstrassCurve::from_roots(a, b, c);
    const auto C = WeierstrassCurve::from_coefficients(R.alpha(), R.beta(), R.gamma());
    EXPECT_EQ(C.roots(), R.roots());
  }
}

TEST(Curve, RejectsSingularAndNonSplit) {
  EXPECT_THROW(WeierstrassCurve::from_coefficients(0, 0, 0), DomainError);
  EXPECT_THROW(WeierstrassCurve::from_coefficients(0, -3, 2), DomainError);
  EXPECT_THROW(WeierstrassCurve::from_coefficients(0, 0, -2), DomainError);
  EXPECT_THROW(WeierstrassCurve::from_roots(1, 1, 2), DomainError);
}

TEST(BuildS, SpecExamples) {
  const auto S = build_exceptional_set(WeierstrassCurve::from_coefficients(0, -1, 0));
  EXPECT_EQ(S.places(), (std::vector<PlaceQ>{P(2), Inf()}));

  const auto E9 = WeierstrassCurve::from_coefficients(0, -9, 0);
  EXPECT_EQ(E9.discriminant(), 2916);
  EXPECT_EQ(testing::trial_factor(2916), (std::map<std::uint64_t, unsigned>{{2, 2}, {3, 6}}));
  EXPECT_EQ(build_exceptional_set(E9).places(), (std::vector<PlaceQ>{P(2), P(3), Inf()}));

  const auto E5 = WeierstrassCurve::from_roots(Rational(1, 5), 0, -1);
  const auto S5 = build_exceptional_set(E5);
  ASSERT_TRUE(S5.contains(P(5)));
  const auto& tags = S5.entries().at(P(5));
  EXPECT_NE(std::find(tags.begin(), tags.end(), PlaceTag::NegativeCoefficientValuation), tags.end());
}

TEST(BuildS, ContainsEveryRequiredPlace) {
  Gen g(63);
  for (int i = 0; i < 300; ++i) {
    const Rational a = g.rational(30), b = g.rational(30), c = g.rational(30);
    if (a == b || b == c || a == c) continue;
    const auto E = WeierstrassCurve::from_roots(a, b, c);
    const auto S = build_exceptional_set(E);
    EXPECT_TRUE(S.contains(Inf()));
    EXPECT_TRUE(S.contains(P(2)));
    const Rational d = E.discriminant();
    for (long p = 2; p < 1000; ++p) {
      if (!testing::trial_is_prime(static_cast<std::uint64_t>(p))) continue;
      bool needed = arith::valuation(d, p) != 0;
      for (const Rational* k : {&E.alpha(), &E.beta(), &E.gamma()})
        needed = needed || (!k->is_zero() && arith::valuation(*k, p) < 0);
      EXPECT_EQ(S.contains(P(p)), needed || p == 2) << E.str() << " at " << p;
    }
  }
}

TEST(BuildS, IsIdempotent) {
  Gen g(64);
  for (int i = 0; i < 200; ++i) {
    const Rational a = g.rational(30), b = g.rational(30), c = g.rational(30);
    if (a == b || b == c || a == c) continue;
    const auto E = WeierstrassCurve::from_roots(a, b, c);
    const auto S = build_exceptional_set(E);
    EXPECT_EQ(build_exceptional_set(E, S.places()).places(), S.places());
  }
}

TEST(SUnits, SpecExamples) {
  EXPECT_EQ(s_unit_square_classes(set_of({Inf(), P(2)})), 4);
  EXPECT_EQ(s_unit_square_classes(set_of({Inf()})), 2);
  EXPECT_EQ(s_unit_square_classes(set_of({Inf(), P(2), P(3), P(5)})), 16);
  EXPECT_THROW(s_unit_square_classes(set_of({P(2)})), DomainError);
}

TEST(SUnits, MatchesEnumerationModuloSquares) {
  const std::vector<long> primes = {2, 3, 5, 7, 11};
  for (std::size_t k = 0; k <= primes.size(); ++k) {
    std::vector<PlaceQ> places = {Inf()};
    std::vector<long> used(primes.begin(), primes.begin() + static_cast<long>(k));
    for (long p : used) places.push_back(P(p));
    EXPECT_EQ(s_unit_square_classes(set_of(places)), testing::brute_s_unit_classes(used));
  }
}

TEST(EllipticBound, SpecExamples) {
  const auto E = WeierstrassCurve::from_coefficients(0, -1, 0);
  const auto b = elliptic_genus_bound(E);
  EXPECT_EQ(b.report.bound, 32);
  EXPECT_EQ(b.report.factor("two_power").value, 2);
  EXPECT_EQ(b.report.factor("cl_factor").value, 1);
  EXPECT_EQ(b.report.factor("unit_factor").value, 16);
  EXPECT_EQ(b.t, 1);
  EXPECT_EQ(b.complex_places, 0);

  EXPECT_EQ(elliptic_genus_bound(E, {P(3)}).report.bound, 256);
  EXPECT_THROW(elliptic_genus_bound(WeierstrassCurve::from_coefficients(0, 0, 0)), DomainError);
}

TEST(EllipticBound, FactorsMultiplyAndGrowWithS) {
  const auto E = WeierstrassCurve::from_coefficients(0, -1, 0);
  std::vector<PlaceQ> extra;
  Integer last = 0;
  for (long p : {3L, 5L, 7L, 11L, 13L, 17L}) {
    const auto b = elliptic_genus_bound(E, extra);
    EXPECT_EQ(b.report.bound, b.report.factor("two_power").value * b.report.factor("cl_factor").value *
                                  b.report.factor("unit_factor").value);
    EXPECT_GE(b.report.bound, last);
    last = b.report.bound;
    extra.push_back(P(p));
  }
}

TEST(EllipticBound, TwoPowerMatchesUnramifiedClasses) {
  Gen g(65);
  for (int i = 0; i < 60; ++i) {
    const Rational a = g.rational(30), b = g.rational(30), c = g.rational(30);
    if (a == b || b == c || a == c) continue;
    const auto E = WeierstrassCurve::from_roots(a, b, c);
    const auto bound = elliptic_genus_bound(E);
    if (bound.exceptional.size() > 12) continue;
    EXPECT_EQ(bound.report.factor("two_power").value,
              Integer(static_cast<unsigned long>(quat::enumerate_unramified(bound.exceptional.places()).size())));
  }
}

}  // namespace
}  // namespace brauer::elliptic
