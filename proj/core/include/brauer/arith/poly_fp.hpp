#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brauer/arith/poly_common.hpp"

namespace brauer::arith {

/// A verified prime p < 2^32; field arithmetic of F_p lives here.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const { return p_; }
  std::uint64_t reduce(std::int64_t c) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
  std::uint64_t pow(std::uint64_t b, std::uint64_t e) const;
  /// DomainError for zero.
  std::uint64_t inv(std::uint64_t a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
};

/// Polynomial over F_p, low-degree coefficient first, trailing zeros stripped.
class PolyFp {
 public:
  using Coeff = std::uint64_t;

  explicit PolyFp(PrimeModulus p) : p_(p) {}
  PolyFp(PrimeModulus p, const std::vector<std::int64_t>& coeffs);

  static PolyFp x(PrimeModulus p) { return PolyFp(p, {0, 1}); }
  static PolyFp constant(PrimeModulus p, std::int64_t c) { return PolyFp(p, {c}); }

  PrimeModulus modulus() const { return p_; }
  std::uint64_t characteristic() const { return p_.value(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Coeff leading() const { return c_.empty() ? 0 : c_.back(); }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Coeff>& coeffs() const { return c_; }

  PolyFp zero_like() const { return PolyFp(p_); }
  PolyFp one_like() const { return constant_like(1); }
  PolyFp x_like() const { return x(p_); }
  PolyFp constant_like(Coeff c) const;

  PolyFp monic() const;
  PolyFp scaled(Coeff c) const;
  PolyFp scaled_inverse(Coeff c) const { return scaled(p_.inv(c)); }
  PolyFp derivative() const;
  /// Coefficients reversed with respect to degree: x^deg * f(1/x).
  PolyFp reversed() const;
  Coeff eval(Coeff at) const;
  Coeff reduce_coeff(std::int64_t c) const { return p_.reduce(c); }
  Coeff inverse_coeff(Coeff c) const { return p_.inv(c); }

  std::string str(const std::string& var = "x") const;

  PolyFp operator-() const;
  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  /// (quotient, remainder); DomainError when dividing by zero.
  friend std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).first; }
  friend PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).second; }

  friend bool operator==(const PolyFp& a, const PolyFp& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  /// Degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const PolyFp& a, const PolyFp& b);

 private:
  PolyFp(PrimeModulus p, std::vector<Coeff> reduced, int /*tag*/) : p_(p), c_(std::move(reduced)) { strip(); }
  void strip();
  void require_same_field(const PolyFp& o) const;

  PrimeModulus p_;
  std::vector<Coeff> c_;
};

/// Field size p^deg(pi) of F_p[x]/(pi).
Integer residue_field_size(const PolyFp& pi);

/// No roots and no factor of degree <= deg/2 (distinct-degree test).
bool is_irreducible(const PolyFp& f);

/// Squarefree, distinct-degree and equal-degree factorization.
/// DomainError for the zero polynomial.
PolyFactorization<PolyFp> poly_factor_fp(const PolyFp& f);

/// Euler criterion in F_p[x]/(pi): r^((q-1)/2) == 1. Needs p odd, pi
/// irreducible and r nonzero modulo pi.
bool is_square_fq(const PolyFp& r, const PolyFp& pi);

}  // namespace brauer::arith
