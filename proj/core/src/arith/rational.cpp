#include "brauer/arith/rational.hpp"

#include <cctype>

#include "brauer/errors.hpp"

namespace brauer {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  std::string digits;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') digits.push_back('-');
    ++i;
  }
  if (i == s.size()) throw DomainError("expected an integer, got '" + std::string(s) + "'");
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw DomainError("expected an integer, got '" + std::string(s) + "'");
    digits.push_back(s[i]);
  }
  return Integer(digits, 10);
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

bool Rational::is_square() const {
  if (sign() < 0) return false;
  if (sign() == 0) return true;
  return mpz_perfect_square_p(value_.get_num_mpz_t()) && mpz_perfect_square_p(value_.get_den_mpz_t());
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

}  // namespace brauer
