#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "brauer/arith/rational.hpp"

namespace brauer::arith {

/// Sign and prime-power decomposition of a nonzero integer.
struct PrimeFactorization {
  int sign = 1;
  std::map<Integer, unsigned> factors;

  /// Reconstructs sign * prod p^e.
  Integer value() const;
  std::vector<Integer> primes() const;
};

/// Deterministic Miller-Rabin bound; larger inputs raise PrimalityLimitError.
inline const Integer& primality_limit() {
  static const Integer limit("3317044064679887385961981");
  return limit;
}

/// Deterministic primality for |n| below primality_limit().
bool is_prime(const Integer& n);
bool is_prime_u64(std::uint64_t n);

/// Trial division up to 10^6, then Pollard rho with Brent cycle detection.
/// Throws DomainError for n = 0.
PrimeFactorization factor(const Integer& n);

/// p-adic valuation. Throws ZeroValuationError for a = 0 and DomainError when
/// p is not prime.
int valuation(const Integer& a, const Integer& p);
int valuation(const Rational& a, const Integer& p);

/// Jacobi symbol (a/n) for odd n >= 1; DomainError otherwise.
int jacobi(const Integer& a, const Integer& n);
/// Legendre symbol for an odd prime p.
int legendre(const Integer& a, const Integer& p);

/// Smallest positive quadratic non-residue modulo an odd prime.
Integer smallest_nonresidue(const Integer& p);

bool is_perfect_square(const Integer& n);

/// Squarefree integer in the class of q modulo squares of nonzero rationals.
Integer squarefree_kernel(const Rational& q);
bool is_squarefree(const Integer& n);

std::uint64_t euler_phi(std::uint64_t n);

/// All positive divisors, ascending.
std::vector<Integer> divisors(const Integer& n);

Integer ipow(const Integer& base, unsigned long exponent);

}  // namespace brauer::arith
