#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "brauer/arith/number_theory.hpp"
#include "brauer/arith/poly_fp.hpp"
#include "brauer/ff/places.hpp"
#include "brauer/local/place.hpp"

namespace brauer::testing {

using arith::PolyFp;
using arith::PrimeModulus;

/// Seeded generators; every property test names its seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  std::uint64_t u64() { return rng_(); }
  bool coin() { return range(0, 1) == 1; }

  /// Nonzero p/q with |p|, q <= height.
  Rational rational(long height) {
    long n = 0;
    while (n == 0) n = range(-height, height);
    return Rational(Integer(n), Integer(range(1, height)));
  }

  /// Nonzero integer in [-height, height].
  Rational integer(long height) {
    long n = 0;
    while (n == 0) n = range(-height, height);
    return Rational(n);
  }

  /// Degree <= max_deg; nonzero.
  PolyFp poly(std::uint64_t p, int max_deg) {
    for (;;) {
      std::vector<std::int64_t> c(static_cast<std::size_t>(range(0, max_deg)) + 1);
      for (auto& x : c) x = range(0, static_cast<long>(p) - 1);
      PolyFp f(PrimeModulus(p), c);
      if (!f.is_zero()) return f;
    }
  }

  /// Nonzero rational function; the denominator is constant half the time.
  ff::RationalFunctionFp function(std::uint64_t p, int max_deg) {
    PolyFp num = poly(p, max_deg);
    PolyFp den = coin() ? poly(p, 0) : poly(p, max_deg);
    return ff::RationalFunctionFp(num, den);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Trial division; n <= 10^12 keeps this fast.
inline std::map<std::uint64_t, unsigned> trial_factor(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  if (n > 1) ++out[n];
  return out;
}

inline bool trial_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Legendre symbol by listing the squares mod p.
inline int brute_legendre(long a, long p) {
  const long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  for (long y = 1; y < p; ++y)
    if (y * y % p == r) return 1;
  return -1;
}

/// Every monic polynomial of exact degree d over F_p.
inline std::vector<PolyFp> all_monic(std::uint64_t p, int d) {
  std::vector<PolyFp> out;
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
    std::uint64_t r = idx;
    for (int i = 0; i < d; ++i, r /= p) c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(r % p);
    c.back() = 1;
    out.emplace_back(PrimeModulus(p), c);
  }
  return out;
}

/// No monic divisor of degree 1..deg/2.
inline bool brute_irreducible(const PolyFp& f) {
  if (f.degree() < 1) return false;
  for (int d = 1; 2 * d <= f.degree(); ++d)
    for (const auto& g : all_monic(f.characteristic(), d))
      if ((f % g).is_zero()) return false;
  return true;
}

/// Every element of F_p[x]/(m), zero included.
inline std::vector<PolyFp> all_residues(const PolyFp& m) {
  std::vector<PolyFp> out;
  const std::uint64_t p = m.characteristic();
  std::uint64_t count = 1;
  for (int i = 0; i < m.degree(); ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::int64_t> c;
    for (std::uint64_t r = idx; r; r /= p) c.push_back(static_cast<std::int64_t>(r % p));
    out.emplace_back(m.modulus(), c);
  }
  return out;
}

/// y^n == t (mod m) for some y, by exhaustion.
inline bool brute_is_power(const PolyFp& t, const PolyFp& m, unsigned n) {
  const PolyFp target = t % m;
  for (const auto& y : all_residues(m)) {
    PolyFp acc = m.one_like();
    for (unsigned i = 0; i < n; ++i) acc = acc * y % m;
    if (acc == target) return true;
  }
  return false;
}

/// All places of F_p(x) of degree <= d: monic irreducibles by brute force, and infinity.
inline std::vector<ff::FFPlaceFp> all_places_upto(std::uint64_t p, int d) {
  std::vector<ff::FFPlaceFp> out;
  for (int k = 1; k <= d; ++k)
    for (const auto& f : all_monic(p, k))
      if (brute_irreducible(f)) out.push_back(ff::FFPlaceFp::from_irreducible_factor(f));
  out.push_back(ff::FFPlaceFp::infinity());
  return out;
}

/// Squarefree part of a nonzero integer by trial division.
inline long squarefree_part(long n) {
  long sign = n < 0 ? -1 : 1, m = n < 0 ? -n : n, out = 1;
  for (long d = 2; d * d <= m; ++d) {
    int e = 0;
    while (m % d == 0) {
      m /= d;
      ++e;
    }
    if (e % 2) out *= d;
  }
  return sign * out * m;
}

/// Classes of {+-prod p^e : e in 0..3} modulo squares.
inline std::size_t brute_s_unit_classes(const std::vector<long>& primes) {
  std::set<long> classes;
  std::vector<int> e(primes.size(), 0);
  for (;;) {
    long v = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (int k = 0; k < e[i]; ++k) v *= primes[i];
    classes.insert(squarefree_part(v));
    classes.insert(squarefree_part(-v));
    std::size_t i = 0;
    while (i < e.size() && e[i] == 3) e[i++] = 0;
    if (i == e.size()) break;
    ++e[i];
  }
  return classes.size();
}

inline local::PlaceQ P(long p) { return local::PlaceQ::finite(Integer(p)); }
inline local::PlaceQ Inf() { return local::PlaceQ::infinity(); }

inline PolyFp fp(std::uint64_t p, std::vector<std::int64_t> c) { return PolyFp(PrimeModulus(p), c); }

}  // namespace brauer::testing
