#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "brauer/ff/rational_function.hpp"

namespace brauer::ff {

/// A geometric place of k(x): a monic irreducible polynomial, or the degree
/// valuation v(f/g) = deg g - deg f. Infinity sorts after every finite place.
template <arith::FieldPolynomial Poly>
class FFPlace {
 public:
  /// DomainError unless pi is monic and irreducible.
  static FFPlace finite(Poly pi) {
    if (pi.degree() < 1 || !(pi == pi.monic())) throw DomainError(pi.str() + " is not a monic nonconstant polynomial");
    if (!arith::is_irreducible(pi)) throw DomainError(pi.str() + " is not irreducible");
    return FFPlace(std::move(pi));
  }
  /// Skips the irreducibility check; for factors produced by a factorization.
  static FFPlace from_irreducible_factor(Poly pi) { return FFPlace(std::move(pi)); }
  static FFPlace infinity() { return FFPlace(); }

  bool is_infinite() const { return !pi_.has_value(); }
  const Poly& poly() const {
    if (!pi_) throw DomainError("the place at infinity has no polynomial");
    return *pi_;
  }
  /// Degree of the residue field over k.
  int degree() const { return pi_ ? pi_->degree() : 1; }
  std::string str() const { return pi_ ? pi_->str() : "inf"; }

  friend bool operator==(const FFPlace& a, const FFPlace& b) { return a.pi_ == b.pi_; }
  friend std::strong_ordering operator<=>(const FFPlace& a, const FFPlace& b) {
    if (a.is_infinite() || b.is_infinite()) {
      if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
      return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return *a.pi_ <=> *b.pi_;
  }

 private:
  FFPlace() = default;
  explicit FFPlace(Poly pi) : pi_(std::move(pi)) {}
  std::optional<Poly> pi_;
};

using FFPlaceFp = FFPlace<PolyFp>;
using FFPlaceQ = FFPlace<PolyQ>;

template <arith::FieldPolynomial Poly>
struct PlaceValuation {
  FFPlace<Poly> place;
  int valuation = 0;
};

namespace detail {

template <arith::FieldPolynomial Poly>
int poly_valuation(Poly f, const Poly& pi) {
  int v = 0;
  for (;;) {
    auto [q, r] = divmod(f, pi);
    if (!r.is_zero()) return v;
    f = std::move(q);
    ++v;
  }
}

template <arith::FieldPolynomial Poly>
Poly pi_power(const Poly& pi, int e) {
  Poly acc = pi.one_like();
  for (int i = 0; i < e; ++i) acc = acc * pi;
  return acc;
}

}  // namespace detail

/// f(1/x), which moves the place at infinity to the place (x).
template <arith::FieldPolynomial Poly>
RationalFunction<Poly> at_infinity_chart(const RationalFunction<Poly>& f) {
  const int dn = f.num().degree(), dd = f.den().degree();
  const Poly x = f.num().x_like();
  Poly num = f.num().reversed() * detail::pi_power(x, std::max(0, dd - dn));
  Poly den = f.den().reversed() * detail::pi_power(x, std::max(0, dn - dd));
  return RationalFunction<Poly>(std::move(num), std::move(den));
}

/// ZeroValuationError for f = 0.
template <arith::FieldPolynomial Poly>
int valuation(const RationalFunction<Poly>& f, const FFPlace<Poly>& w) {
  if (f.is_zero()) throw ZeroValuationError();
  if (w.is_infinite()) return f.den().degree() - f.num().degree();
  return detail::poly_valuation(f.num(), w.poly()) - detail::poly_valuation(f.den(), w.poly());
}

/// Polynomial generating the maximal ideal used for residues at w; x for
/// the place at infinity (after at_infinity_chart).
template <arith::FieldPolynomial Poly>
Poly residue_modulus(const FFPlace<Poly>& w, const Poly& like) {
  return w.is_infinite() ? like.x_like() : w.poly();
}

/// Residue of f * pi^(-v_w(f)) in k[x]/(pi), as a polynomial of degree
/// below deg pi. At infinity the residue field is k and the result is
/// a constant.
template <arith::FieldPolynomial Poly>
Poly unit_residue(const RationalFunction<Poly>& f, const FFPlace<Poly>& w) {
  if (f.is_zero()) throw ZeroValuationError();
  if (w.is_infinite())
    return unit_residue(at_infinity_chart(f), FFPlace<Poly>::from_irreducible_factor(f.num().x_like()));
  const Poly& pi = w.poly();
  Poly num = f.num(), den = f.den();
  const int vn = detail::poly_valuation(num, pi);
  const int vd = detail::poly_valuation(den, pi);
  num = num / detail::pi_power(pi, vn);
  den = den / detail::pi_power(pi, vd);
  return (num % pi) * arith::inverse_mod(den % pi, pi) % pi;
}

/// Every place where v(f) != 0, sorted. DomainError for f = 0.
std::vector<PlaceValuation<PolyFp>> places_of(const RationalFunctionFp& f);
std::vector<PlaceValuation<PolyQ>> places_of(const RationalFunctionQ& f);

}  // namespace brauer::ff
