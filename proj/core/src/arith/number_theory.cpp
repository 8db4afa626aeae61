#include "brauer/arith/number_theory.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "brauer/errors.hpp"

namespace brauer::arith {

namespace {

constexpr std::uint32_t kTrialBound = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

__extension__ using u128 = unsigned __int128;

constexpr std::array<unsigned, 13> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool fits_u64(const Integer& n) { return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

std::uint64_t to_u64(const Integer& n) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

Integer from_u64(std::uint64_t v) {
  Integer out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

bool miller_rabin_mpz(const Integer& n) {
  Integer d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  const Integer nm1 = n - 1;
  for (unsigned a : kWitnesses) {
    Integer x;
    Integer base(a);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == nm1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t brent_u64(std::uint64_t n, std::uint64_t c) {
  auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
  auto diff = [](std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; };
  std::uint64_t y = 2, x = 2, ys = 2, q = 1, g = 1;
  constexpr std::uint64_t m = 128;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod(q, diff(x, y), n);
      }
      g = std::gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(diff(x, ys), n);
    } while (g == 1);
  }
  return g;
}

// Returns 0 when the iteration budget runs out.
Integer brent_mpz(const Integer& n, unsigned long c, std::uint64_t budget) {
  auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
  Integer y = 2, x = 2, ys = 2, q = 1, g = 1;
  constexpr std::uint64_t m = 128;
  std::uint64_t spent = 0;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = q * abs(x - y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
    spent += 2 * r;
    if (g == 1 && spent > budget) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      Integer dlt = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), dlt.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

Integer find_divisor(const Integer& n) {
  if (mpz_perfect_square_p(n.get_mpz_t())) return sqrt(n);
  const bool certified = n < primality_limit();
  for (unsigned long c = 1; c < 64; ++c) {
    Integer g;
    if (fits_u64(n)) {
      g = from_u64(brent_u64(to_u64(n), c));
    } else {
      g = brent_mpz(n, c, certified ? ~std::uint64_t{0} : std::uint64_t{1} << 22);
      if (g == 0) break;
    }
    if (g != 1 && g != n) return g;
  }
  throw PrimalityLimitError("cannot split " + n.get_str() +
                            " within budget and it is beyond the deterministic primality range");
}

void split(const Integer& m, std::map<Integer, unsigned>& out) {
  if (m == 1) return;
  if (m < primality_limit() && is_prime(m)) {
    ++out[m];
    return;
  }
  Integer d = find_divisor(m);
  split(d, out);
  split(Integer(m / d), out);
}

void require_prime(const Integer& p) {
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
}

}  // namespace

Integer PrimeFactorization::value() const {
  Integer v = sign;
  for (const auto& [p, e] : factors) v *= ipow(p, e);
  return v;
}

std::vector<Integer> PrimeFactorization::primes() const {
  std::vector<Integer> out;
  out.reserve(factors.size());
  for (const auto& kv : factors) out.push_back(kv.first);
  return out;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (unsigned p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  if (n >= primality_limit())
    throw PrimalityLimitError(n.get_str() + " exceeds the deterministic Miller-Rabin range");
  for (unsigned p : kWitnesses) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  return miller_rabin_mpz(n);
}

PrimeFactorization factor(const Integer& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  PrimeFactorization out;
  out.sign = n < 0 ? -1 : 1;
  Integer m = abs(n);

  if (fits_u64(m)) {
    std::uint64_t r = to_u64(m);
    for (std::uint32_t p : small_primes()) {
      if (std::uint64_t{p} * p > r) break;
      if (r % p) continue;
      unsigned e = 0;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      out.factors[Integer(p)] = e;
    }
    m = from_u64(r);
  } else {
    for (std::uint32_t p : small_primes()) {
      if (Integer(p) * p > m) break;
      if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.factors[Integer(p)] = e;
    }
  }
  if (m == 1) return out;
  // No factor below 10^6 remains, so anything below 10^12 is prime.
  if (m < Integer(std::uint64_t{kTrialBound}) * kTrialBound) {
    ++out.factors[m];
    return out;
  }
  split(m, out.factors);
  return out;
}

int valuation(const Integer& a, const Integer& p) {
  if (a == 0) throw ZeroValuationError();
  require_prime(p);
  Integer m = a;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& a, const Integer& p) {
  if (a.is_zero()) throw ZeroValuationError();
  return valuation(a.num(), p) - valuation(a.den(), p);
}

int jacobi(const Integer& a_in, const Integer& n_in) {
  if (n_in < 1 || mpz_even_p(n_in.get_mpz_t()))
    throw DomainError("Jacobi symbol needs an odd positive modulus, got " + n_in.get_str());
  Integer n = n_in;
  Integer a = a_in % n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (mpz_even_p(a.get_mpz_t())) {
      a >>= 1;
      unsigned long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

int legendre(const Integer& a, const Integer& p) {
  if (p == 2) throw DomainError("Legendre symbol needs an odd prime");
  require_prime(p);
  return jacobi(a, p);
}

Integer smallest_nonresidue(const Integer& p) {
  if (p == 2) throw DomainError("every unit is a square modulo 2");
  require_prime(p);
  for (Integer a = 2;; ++a) {
    if (jacobi(a, p) == -1) return a;
  }
}

bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

Integer squarefree_kernel(const Rational& q) {
  if (q.is_zero()) throw DomainError("zero has no square class");
  const auto f = factor(q.num() * q.den());
  Integer out = f.sign;
  for (const auto& [p, e] : f.factors) {
    if (e % 2) out *= p;
  }
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  const auto f = factor(n);
  return std::all_of(f.factors.begin(), f.factors.end(), [](const auto& kv) { return kv.second == 1; });
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("phi(0) is undefined");
  std::uint64_t result = n;
  for (const auto& [p, e] : factor(from_u64(n)).factors) {
    const std::uint64_t pu = to_u64(p);
    result = result / pu * (pu - 1);
  }
  return result;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factor(n).factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace brauer::arith
