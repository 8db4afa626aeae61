#pragma once

#include <concepts>
#include <utility>
#include <vector>

#include "brauer/arith/rational.hpp"
#include "brauer/errors.hpp"

namespace brauer::arith {

/// Univariate polynomial ring over a field, as used by the Euclidean helpers.
template <class P>
concept FieldPolynomial = requires(const P& a, const P& b) {
  { a.degree() } -> std::convertible_to<int>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.monic() } -> std::same_as<P>;
  { a.one_like() } -> std::same_as<P>;
  { divmod(a, b) } -> std::same_as<std::pair<P, P>>;
  { a * b } -> std::same_as<P>;
  { a - b } -> std::same_as<P>;
};

template <class Poly>
struct PolyFactor {
  Poly factor;
  unsigned multiplicity = 1;
};

/// leading * prod factor^multiplicity, factors monic, irreducible and distinct.
template <class Poly>
struct PolyFactorization {
  typename Poly::Coeff leading;
  std::vector<PolyFactor<Poly>> factors;

  Poly expand(const Poly& one) const {
    Poly acc = one.scaled(leading);
    for (const auto& f : factors)
      for (unsigned i = 0; i < f.multiplicity; ++i) acc = acc * f.factor;
    return acc;
  }
};

/// Monic gcd; zero only when both inputs are zero.
template <FieldPolynomial P>
P gcd(P a, P b) {
  while (!b.is_zero()) {
    P r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

/// Inverse of a modulo m; DomainError when they share a factor.
template <FieldPolynomial P>
P inverse_mod(const P& a, const P& m) {
  P r0 = m, r1 = divmod(a, m).second;
  P s0 = m.zero_like(), s1 = m.one_like();
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    P s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw DomainError("element is not invertible modulo " + m.str());
  return divmod(s0.scaled_inverse(r0.leading()), m).second;
}

/// base^e mod m for e >= 0.
template <FieldPolynomial P>
P pow_mod(const P& base, const Integer& e, const P& m) {
  if (e < 0) return pow_mod(inverse_mod(base, m), Integer(-e), m);
  P result = divmod(m.one_like(), m).second;
  P b = divmod(base, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, m).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = divmod(result * b, m).second;
  }
  return result;
}

}  // namespace brauer::arith
