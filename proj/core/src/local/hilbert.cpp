#include "brauer/local/hilbert.hpp"

#include <cstdint>
#include <limits>

#include "brauer/arith/number_theory.hpp"
#include "brauer/errors.hpp"

namespace brauer::local {

namespace {

// a = p^v * (unit), with the unit summarised by what the local formulas need.
struct LocalUnit {
  int v = 0;
  int legendre = 1;   // odd p: Legendre symbol of the unit
  unsigned mod8 = 1;  // p = 2: unit modulo 8
};

int jacobi_u64(std::uint64_t a, std::uint64_t n) {
  a %= n;
  int result = 1;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const auto r = n & 7;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if ((a & 3) == 3 && (n & 3) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

bool fits_long(const Integer& z) { return mpz_fits_slong_p(z.get_mpz_t()) != 0; }

std::uint64_t mod_u(long x, std::uint64_t m) {
  const long r = x % static_cast<long>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(m) : r);
}

LocalUnit decompose_small(long num, long den, std::uint64_t p) {
  LocalUnit out;
  const long sp = static_cast<long>(p);
  while (num % sp == 0) {
    num /= sp;
    ++out.v;
  }
  while (den % sp == 0) {
    den /= sp;
    --out.v;
  }
  if (p == 2) {
    out.mod8 = static_cast<unsigned>(mod_u(num, 8) * mod_u(den, 8) % 8);
  } else {
    out.legendre = jacobi_u64(mod_u(num, p), p) * jacobi_u64(mod_u(den, p), p);
  }
  return out;
}

LocalUnit decompose(const Rational& a, const Integer& p) {
  if (a.is_zero()) throw DomainError("zero has no local square class");
  const Integer num = a.num(), den = a.den();
  if (fits_long(num) && fits_long(den) && fits_long(p))
    return decompose_small(num.get_si(), den.get_si(), p.get_ui());
  LocalUnit out;
  Integer n = num, d = den;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    n /= p;
    ++out.v;
  }
  while (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
    d /= p;
    --out.v;
  }
  if (p == 2) {
    out.mod8 = static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), 8) * mpz_fdiv_ui(d.get_mpz_t(), 8) % 8);
  } else {
    out.legendre = arith::jacobi(n, p) * arith::jacobi(d, p);
  }
  return out;
}

bool odd(int v) { return (v & 1) != 0; }

// (u - 1)/2 and (u^2 - 1)/8 modulo 2 for an odd residue u mod 8.
int eps(unsigned u) { return static_cast<int>(((u - 1) / 2) & 1); }
int omega(unsigned u) { return static_cast<int>(((u * u - 1) / 8) & 1); }

}  // namespace

LocalSquareClass operator*(const LocalSquareClass& a, const LocalSquareClass& b) {
  if (!(a.place == b.place)) throw DomainError("square classes at different places");
  return square_class(Rational(Integer(a.representative * b.representative)), a.place);
}

LocalSquareClass square_class(const Rational& a, const PlaceQ& v) {
  if (a.is_zero()) throw DomainError("zero has no square class");
  if (v.is_infinite()) return {v, Integer(a.sign())};
  const Integer& p = v.prime();
  const LocalUnit u = decompose(a, p);
  Integer rep = odd(u.v) ? p : Integer(1);
  if (p == 2) {
    // Units mod squares of Z_2 are {1, 3, 5, 7} mod 8 = {1, -5, 5, -1}.
    static constexpr int kLabel[8] = {0, 1, 0, -5, 0, 5, 0, -1};
    rep *= kLabel[u.mod8];
  } else if (u.legendre == -1) {
    rep *= arith::smallest_nonresidue(p);
  }
  return {v, rep};
}

int hilbert(const Rational& a, const Rational& b, const PlaceQ& v) {
  if (a.is_zero() || b.is_zero()) throw DomainError("Hilbert symbol needs nonzero entries");
  if (v.is_infinite()) return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
  const Integer& p = v.prime();
  const LocalUnit ua = decompose(a, p);
  const LocalUnit ub = decompose(b, p);
  if (p == 2) {
    const int e = eps(ua.mod8) * eps(ub.mod8) + (odd(ua.v) ? omega(ub.mod8) : 0) + (odd(ub.v) ? omega(ua.mod8) : 0);
    return odd(e) ? -1 : 1;
  }
  int s = 1;
  if (odd(ua.v) && odd(ub.v) && mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) s = -s;
  if (odd(ub.v)) s *= ua.legendre;
  if (odd(ua.v)) s *= ub.legendre;
  return s;
}

LocalInvariant operator+(const LocalInvariant& a, const LocalInvariant& b) {
  Rational s = a.value + b.value;
  while (s >= Rational(1)) s -= Rational(1);
  return {s};
}

LocalInvariant invariant(const Rational& a, const Rational& b, const PlaceQ& v) {
  return {hilbert(a, b, v) == 1 ? Rational(0) : Rational(1, 2)};
}

}  // namespace brauer::local
