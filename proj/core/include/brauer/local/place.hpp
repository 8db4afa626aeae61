#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "brauer/arith/rational.hpp"

namespace brauer::local {

/// A place of Q: a finite prime p or the real place. The real place sorts
/// after every finite one.
class PlaceQ {
 public:
  /// DomainError unless p is prime.
  static PlaceQ finite(const Integer& p);
  static PlaceQ infinity() { return PlaceQ(); }
  /// Accepts a prime or one of "inf", "oo", "∞".
  static PlaceQ parse(std::string_view text);

  bool is_infinite() const { return !prime_.has_value(); }
  bool is_finite() const { return prime_.has_value(); }
  /// DomainError for the real place.
  const Integer& prime() const;

  std::string str() const;

  friend bool operator==(const PlaceQ& a, const PlaceQ& b);
  friend std::strong_ordering operator<=>(const PlaceQ& a, const PlaceQ& b);

 private:
  PlaceQ() = default;
  explicit PlaceQ(Integer p) : prime_(std::move(p)) {}
  std::optional<Integer> prime_;
};

}  // namespace brauer::local
