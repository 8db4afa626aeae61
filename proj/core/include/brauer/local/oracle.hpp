#pragma once

#include <cstdint>

#include "brauer/arith/rational.hpp"

namespace brauer::local {

// Brute-force decision of whether z^2 = a x^2 + b y^2 has a nontrivial
// solution over Q_p. Nothing here uses Legendre symbols or the closed-form
// Hilbert formulas; it searches residues digit by digit and certifies a
// solution with Hensel's criterion v(F) > 2 v(dF) at a unit pivot.

struct OracleOptions {
  /// p = 2 is rejected unless set.
  bool allow_two = false;
};

/// a = p^(2k + parity) * unit with unit a p-adic unit known modulo p^precision.
struct OracleCoefficient {
  int parity = 0;
  std::uint64_t unit = 1;
};

/// Largest prime the search accepts.
inline constexpr std::uint64_t kOracleMaxPrime = 10'000;

/// Reduces a nonzero rational for the search at p. DomainError when a = 0
/// or |v_p(a)| > 4.
OracleCoefficient oracle_reduce(const Rational& a, std::uint64_t p);

/// +1 if the form has a nontrivial Q_p-zero, -1 otherwise. Exhaustive: about
/// p^2 work when at most one coefficient has odd valuation, about p^4 when both do.
int solve_local_conic(OracleCoefficient a, OracleCoefficient b, std::uint64_t p);

/// DomainError for zero inputs, for non-prime p, or for p = 2 without
/// options.allow_two; UnsupportedError above kOracleMaxPrime.
int hilbert_oracle(const Rational& a, const Rational& b, const Integer& p, OracleOptions options = {});

/// Real place: solvable unless both coefficients are negative.
int hilbert_oracle_real(const Rational& a, const Rational& b);

}  // namespace brauer::local
