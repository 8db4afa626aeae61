#include <gtest/gtest.h>

#include "brauer/arith/number_theory.hpp"
#include "brauer/errors.hpp"
#include "support.hpp"

namespace brauer::arith {
namespace {

using testing::Gen;

TEST(Rational, NormalizesAndCompares) {
  EXPECT_EQ(Rational(6, 4), Rational(3, 2));
  EXPECT_EQ(Rational(Integer(3), Integer(-6)).str(), "-1/2");
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(Rational::parse("-9/4").num(), -9);
  EXPECT_EQ(Rational::parse("-9/4").den(), 4);
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Rational, RejectsZeroDenominatorAndDivision) {
  EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
  EXPECT_THROW(Rational(0).inverse(), DomainError);
}

TEST(Rational, SquaresAreExact) {
  EXPECT_TRUE(Rational(9, 4).is_square());
  EXPECT_FALSE(Rational(-4).is_square());
  EXPECT_FALSE(Rational(2, 9).is_square());
}

TEST(Factor, SpecExamples) {
  const auto one = factor(1);
  EXPECT_EQ(one.sign, 1);
  EXPECT_TRUE(one.factors.empty());

  const auto m12 = factor(-12);
  EXPECT_EQ(m12.sign, -1);
  EXPECT_EQ(m12.factors, (std::map<Integer, unsigned>{{2, 2}, {3, 1}}));

  const auto big = factor(360360);
  EXPECT_EQ(big.factors, (std::map<Integer, unsigned>{{2, 3}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}));
}

TEST(Factor, ZeroIsRejected) { EXPECT_THROW(factor(0), DomainError); }

TEST(Factor, AgreesWithTrialDivisionBelowTenToTwelve) {
  Gen g(11);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.range(2, 1'000'000'000'000L));
    const auto want = testing::trial_factor(n);
    const auto got = factor(Integer(static_cast<unsigned long>(n)));
    ASSERT_EQ(got.factors.size(), want.size()) << n;
    for (const auto& [p, e] : want) EXPECT_EQ(got.factors.at(Integer(static_cast<unsigned long>(p))), e) << n;
  }
}

TEST(Factor, RoundTripsOnRandom64BitIntegers) {
  Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    Integer n(static_cast<unsigned long>(g.u64() | 1u));
    if (g.coin()) n *= 1024;
    const auto f = factor(n);
    EXPECT_EQ(f.value(), n);
    for (const auto& [p, e] : f.factors) {
      EXPECT_GE(e, 1u);
      EXPECT_NE(mpz_probab_prime_p(p.get_mpz_t(), 30), 0) << p;
    }
  }
}

TEST(Factor, SemiprimeOfTwoLargePrimes) {
  const Integer p("1000000007"), q("998244353");
  const auto f = factor(p * q);
  EXPECT_EQ(f.factors, (std::map<Integer, unsigned>{{q, 1}, {p, 1}}));
}

TEST(Primality, MatchesTrialDivisionBelowTwentyThousand) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    EXPECT_EQ(is_prime(Integer(static_cast<unsigned long>(n))), testing::trial_is_prime(n)) << n;
    EXPECT_EQ(is_prime_u64(n), testing::trial_is_prime(n)) << n;
  }
}

TEST(Primality, StrongPseudoprimesAreComposite) {
  EXPECT_FALSE(is_prime(Integer("3215031751")));
  EXPECT_FALSE(is_prime(Integer("3825123056546413051")));
  EXPECT_TRUE(is_prime(Integer("18446744073709551557")));
}

TEST(Primality, RefusesBeyondTheDeterministicRange) {
  EXPECT_THROW(is_prime(primality_limit() + 1), PrimalityLimitError);
}

TEST(Valuation, SpecExamples) {
  EXPECT_EQ(valuation(Rational(10), 2), 1);
  EXPECT_EQ(valuation(Rational(9, 4), 2), -2);
  EXPECT_EQ(valuation(Rational(10), 3), 0);
}

TEST(Valuation, ZeroAndCompositeAreErrors) {
  EXPECT_THROW(valuation(Rational(0), 2), ZeroValuationError);
  EXPECT_THROW(valuation(Rational(12), 4), DomainError);
}

TEST(Valuation, IsAdditive) {
  Gen g(13);
  const std::vector<long> primes = {2, 3, 5, 7, 11, 13};
  for (int i = 0; i < 1000; ++i) {
    const Rational a = g.rational(5000), b = g.rational(5000);
    for (long p : primes) EXPECT_EQ(valuation(a * b, p), valuation(a, p) + valuation(b, p));
  }
}

TEST(Jacobi, SpecExamples) {
  for (long n : {1L, 3L, 9L, 15L, 21L}) EXPECT_EQ(jacobi(1, n), 1);
  EXPECT_EQ(jacobi(10, 3), 1);
  EXPECT_EQ(jacobi(10, 7), -1);
}

TEST(Jacobi, AgreesWithBruteLegendreBelowTwoHundred) {
  for (long p = 3; p < 200; ++p) {
    if (!testing::trial_is_prime(static_cast<std::uint64_t>(p))) continue;
    for (long a = -p; a < 2 * p; ++a) {
      ASSERT_EQ(jacobi(a, p), testing::brute_legendre(a, p)) << a << " mod " << p;
      ASSERT_EQ(legendre(a, p), testing::brute_legendre(a, p)) << a << " mod " << p;
    }
  }
}

TEST(Jacobi, IsMultiplicativeInTheModulus) {
  for (long a = -20; a <= 20; ++a)
    EXPECT_EQ(jacobi(a, 15), testing::brute_legendre(a, 3) * testing::brute_legendre(a, 5));
}

TEST(Jacobi, RejectsEvenModulus) { EXPECT_THROW(jacobi(3, 8), DomainError); }

TEST(SmallestNonresidue, IsTheFirstNonSquare) {
  for (long p = 3; p < 500; p += 2) {
    if (!testing::trial_is_prime(static_cast<std::uint64_t>(p))) continue;
    long u = 2;
    while (testing::brute_legendre(u, p) != -1) ++u;
    EXPECT_EQ(smallest_nonresidue(p), u) << p;
  }
}

TEST(SquarefreeKernel, MatchesTrialDivision) {
  Gen g(14);
  for (int i = 0; i < 500; ++i) {
    const long n = g.integer(100000).num().get_si();
    EXPECT_EQ(squarefree_kernel(Rational(n)), testing::squarefree_part(n)) << n;
  }
  EXPECT_EQ(squarefree_kernel(Rational(9, 8)), 2);
  EXPECT_EQ(squarefree_kernel(Rational(-1, 3)), -3);
}

TEST(EulerPhi, SmallValues) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(2), 1u);
  EXPECT_EQ(euler_phi(3), 2u);
  EXPECT_EQ(euler_phi(12), 4u);
  for (std::uint64_t n = 1; n < 200; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

}  // namespace
}  // namespace brauer::arith
