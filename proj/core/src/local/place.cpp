#include "brauer/local/place.hpp"

#include "brauer/arith/number_theory.hpp"
#include "brauer/errors.hpp"

namespace brauer::local {

PlaceQ PlaceQ::finite(const Integer& p) {
  if (!arith::is_prime(p)) throw DomainError(p.get_str() + " is not a prime, so not a place of Q");
  return PlaceQ(p);
}

PlaceQ PlaceQ::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf" || text == "oo" || text == "∞" || text == "infinity") return infinity();
  const Rational r = Rational::parse(text);
  if (!r.is_integer()) throw DomainError("place must be a prime or 'inf', got '" + std::string(text) + "'");
  return finite(r.num());
}

const Integer& PlaceQ::prime() const {
  if (!prime_) throw DomainError("the real place has no prime");
  return *prime_;
}

std::string PlaceQ::str() const { return prime_ ? prime_->get_str() : "inf"; }

bool operator==(const PlaceQ& a, const PlaceQ& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.prime_ == *b.prime_;
}

std::strong_ordering operator<=>(const PlaceQ& a, const PlaceQ& b) {
  if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
  if (a.is_infinite()) return std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  return cmp(*a.prime_, *b.prime_) <=> 0;
}

}  // namespace brauer::local
