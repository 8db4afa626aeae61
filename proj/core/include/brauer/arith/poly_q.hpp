#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauer/arith/poly_common.hpp"
#include "brauer/arith/poly_fp.hpp"

namespace brauer::arith {

/// Polynomial with rational coefficients, low degree first, trailing zeros stripped.
class PolyQ {
 public:
  using Coeff = Rational;

  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);

  static PolyQ x() { return PolyQ({Rational(0), Rational(1)}); }
  static PolyQ constant(const Rational& c) { return PolyQ({c}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  PolyQ zero_like() const { return {}; }
  PolyQ one_like() const { return constant(1); }
  PolyQ x_like() const { return x(); }
  PolyQ constant_like(const Rational& c) const { return constant(c); }

  PolyQ monic() const;
  PolyQ scaled(const Rational& c) const;
  PolyQ scaled_inverse(const Rational& c) const { return scaled(c.inverse()); }
  PolyQ derivative() const;
  PolyQ reversed() const;
  Rational eval(const Rational& at) const;

  /// Integer coefficients of the primitive model (positive leading
  /// coefficient, content 1) together with the rational c so that
  /// f = c * model.
  std::pair<std::vector<Integer>, Rational> primitive_model() const;

  std::string str(const std::string& var = "x") const;

  PolyQ operator-() const;
  friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator/(const PolyQ& a, const PolyQ& b) { return divmod(a, b).first; }
  friend PolyQ operator%(const PolyQ& a, const PolyQ& b) { return divmod(a, b).second; }

  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const PolyQ& a, const PolyQ& b);

 private:
  void strip();
  std::vector<Rational> c_;
};

/// Largest degree for which reducibility is decided by exhaustive search
/// when reduction modulo small primes does not already prove irreducibility.
inline constexpr int kMaxFactorSearchDegree = 6;

/// Image of f in F_p[x]; nullopt when p divides a coefficient denominator.
std::optional<PolyFp> reduce_mod(const PolyQ& f, PrimeModulus p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const PolyQ& f);

/// Factorization over Q. Squarefree decomposition, rational roots, a
/// modular degree sieve and Kronecker's method for the remaining pieces.
/// UnsupportedError when a piece above kMaxFactorSearchDegree cannot be
/// settled by the sieve.
PolyFactorization<PolyQ> poly_factor_q(const PolyQ& f);

bool is_irreducible(const PolyQ& f);

}  // namespace brauer::arith
