#include "brauer/elliptic/curve.hpp"

#include <algorithm>

#include "brauer/errors.hpp"

namespace brauer::elliptic {

Rational cubic_discriminant(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  const Rational& a = alpha;
  const Rational& b = beta;
  const Rational& c = gamma;
  return a * a * b * b - Rational(4) * b * b * b - Rational(4) * a * a * a * c - Rational(27) * c * c +
         Rational(18) * a * b * c;
}

Rational discriminant(const arith::PolyQ& f) {
  if (f.degree() != 3 || f.leading() != Rational(1)) throw DomainError(f.str() + " is not a monic cubic");
  return cubic_discriminant(f.coeff(2), f.coeff(1), f.coeff(0));
}

WeierstrassCurve::WeierstrassCurve(Rational alpha, Rational beta, Rational gamma, std::array<Rational, 3> roots)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)), roots_(std::move(roots)) {
  delta_ = cubic_discriminant(alpha_, beta_, gamma_);
  if (delta_.is_zero()) throw DomainError("discriminant is zero; the curve is singular");
  std::sort(roots_.begin(), roots_.end());
}

WeierstrassCurve WeierstrassCurve::from_coefficients(const Rational& alpha, const Rational& beta,
                                                     const Rational& gamma) {
  if (cubic_discriminant(alpha, beta, gamma).is_zero())
    throw DomainError("discriminant is zero; the curve is singular");
  const arith::PolyQ f({gamma, beta, alpha, Rational(1)});
  const auto roots = arith::rational_roots(f);
  if (roots.size() != 3) throw DomainError(f.str() + " does not split over Q");
  return WeierstrassCurve(alpha, beta, gamma, {roots[0], roots[1], roots[2]});
}

WeierstrassCurve WeierstrassCurve::from_roots(const Rational& a, const Rational& b, const Rational& c) {
  if (a == b || b == c || a == c) throw DomainError("roots must be distinct; the curve would be singular");
  return WeierstrassCurve(-(a + b + c), a * b + b * c + a * c, -(a * b * c), {a, b, c});
}

}  // namespace brauer::elliptic
