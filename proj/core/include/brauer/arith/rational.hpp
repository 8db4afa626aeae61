#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace brauer {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Zero is always 0/1. All values are immutable once constructed; the
/// arithmetic operators return fresh values.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  /// Unevaluated gmpxx integer expressions such as a * b.
  template <class Expr>
  Rational(const __gmp_expr<mpz_t, Expr>& e) : value_(Integer(e)) {}  // NOLINT(google-explicit-constructor)
  /// Throws DomainError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "n" or "n/d" with optional sign and surrounding whitespace.
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  /// True when the value is the square of a rational number.
  bool is_square() const;

  Rational abs() const;
  /// Throws DomainError for zero.
  Rational inverse() const;

  std::string str() const { return value_.get_str(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws DomainError on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_{0};
};

/// Integer power with negative exponents allowed for nonzero bases.
Rational pow(const Rational& base, long exponent);

}  // namespace brauer
