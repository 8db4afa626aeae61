#pragma once

#include <array>
#include <string>

#include "brauer/arith/poly_q.hpp"
#include "brauer/arith/rational.hpp"

namespace brauer::elliptic {

/// Discriminant of x^3 + alpha x^2 + beta x + gamma.
Rational cubic_discriminant(const Rational& alpha, const Rational& beta, const Rational& gamma);
/// DomainError unless f is a monic cubic.
Rational discriminant(const arith::PolyQ& f);

/// y^2 = x^3 + alpha x^2 + beta x + gamma = (x - a)(x - b)(x - c) with
/// a, b, c distinct rationals.
class WeierstrassCurve {
 public:
  /// Finds the roots by the rational root test. DomainError when the cubic
  /// is singular (discriminant 0) or does not split over Q.
  static WeierstrassCurve from_coefficients(const Rational& alpha, const Rational& beta, const Rational& gamma);
  /// DomainError when two roots coincide.
  static WeierstrassCurve from_roots(const Rational& a, const Rational& b, const Rational& c);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& gamma() const { return gamma_; }
  /// Ascending.
  const std::array<Rational, 3>& roots() const { return roots_; }
  const Rational& discriminant() const { return delta_; }
  arith::PolyQ cubic() const { return arith::PolyQ({gamma_, beta_, alpha_, Rational(1)}); }
  std::string str() const { return "y^2 = " + cubic().str(); }

 private:
  WeierstrassCurve(Rational alpha, Rational beta, Rational gamma, std::array<Rational, 3> roots);

  Rational alpha_, beta_, gamma_;
  std::array<Rational, 3> roots_;
  Rational delta_;
};

}  // namespace brauer::elliptic
