#pragma once

#include <string>
#include <utility>

#include "brauer/arith/poly_fp.hpp"
#include "brauer/arith/poly_q.hpp"
#include "brauer/errors.hpp"

namespace brauer::ff {

using arith::PolyFp;
using arith::PolyQ;

/// Element of k(x) in lowest terms with a monic denominator.
template <arith::FieldPolynomial Poly>
class RationalFunction {
 public:
  using Coeff = typename Poly::Coeff;

  explicit RationalFunction(Poly num) : num_(std::move(num)), den_(num_.one_like()) {}

  /// DomainError when den is zero.
  RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    normalize();
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  RationalFunction inverse() const {
    if (is_zero()) throw DomainError("inverse of the zero function");
    return RationalFunction(den_, num_);
  }

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Integer power; negative exponents need a nonzero base.
  RationalFunction pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction acc(num_.one_like());
    RationalFunction base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  std::string str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = den_.one_like();
      return;
    }
    Poly g = arith::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    const Coeff lead = den_.leading();
    den_ = den_.monic();
    num_ = num_.scaled_inverse(lead);
  }

  Poly num_;
  Poly den_;
};

using RationalFunctionFp = RationalFunction<PolyFp>;
using RationalFunctionQ = RationalFunction<PolyQ>;

}  // namespace brauer::ff
