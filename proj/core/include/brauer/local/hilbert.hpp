#pragma once

#include <string>

#include "brauer/arith/rational.hpp"
#include "brauer/local/place.hpp"

namespace brauer::local {

/// Coset a * (Q_v^x)^2, labelled by a canonical representative:
///   odd p : one of 1, u, p, u*p with u the least non-residue mod p
///   p = 2 : one of +-1, +-2, +-5, +-10
///   real  : +1 or -1
struct LocalSquareClass {
  PlaceQ place;
  Integer representative;

  bool is_identity() const { return representative == 1; }
  std::string str() const { return representative.get_str(); }

  friend bool operator==(const LocalSquareClass&, const LocalSquareClass&) = default;
  /// Class of the product; DomainError when places differ.
  friend LocalSquareClass operator*(const LocalSquareClass& a, const LocalSquareClass& b);
};

/// DomainError for a = 0.
LocalSquareClass square_class(const Rational& a, const PlaceQ& v);

/// Hilbert symbol (a, b)_v in {+1, -1} from the closed-form local formulas.
/// DomainError when a or b is zero.
int hilbert(const Rational& a, const Rational& b, const PlaceQ& v);

/// Local invariant in (1/2)Z/Z of the quaternion algebra (a, b) over Q_v.
struct LocalInvariant {
  Rational value;  // 0 or 1/2

  bool is_split() const { return value.is_zero(); }
  std::string str() const { return value.str(); }
  friend bool operator==(const LocalInvariant&, const LocalInvariant&) = default;
  /// Sum in Q/Z.
  friend LocalInvariant operator+(const LocalInvariant& a, const LocalInvariant& b);
};

LocalInvariant invariant(const Rational& a, const Rational& b, const PlaceQ& v);

}  // namespace brauer::local
