#include "brauer/local/oracle.hpp"

#include <array>
#include <cstdlib>

#include "brauer/arith/number_theory.hpp"
#include "brauer/errors.hpp"

namespace brauer::local {

namespace {

// Deepest precision any pivot needs: 2 e + 1 with e <= v(2) + 1.
unsigned precision_for(std::uint64_t p) { return p == 2 ? 5 : 3; }

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  // Extended Euclid on signed 128-bit values; a is a unit modulo m.
  i128 r0 = static_cast<i128>(m), r1 = static_cast<i128>(a % m);
  i128 s0 = 0, s1 = 1;
  while (r1 != 0) {
    const i128 q = r0 / r1;
    const i128 r = r0 - q * r1;
    r0 = r1;
    r1 = r;
    const i128 s = s0 - q * s1;
    s0 = s1;
    s1 = s;
  }
  if (r0 != 1) throw DomainError("oracle: coefficient is not a unit");
  i128 out = s0 % static_cast<i128>(m);
  if (out < 0) out += m;
  return static_cast<std::uint64_t>(out);
}

// F = Z^2 - A X^2 - B Y^2 with the pivot coordinate fixed to 1 and the two
// free coordinates refined one p-adic digit at a time.
class ConicSearch {
 public:
  ConicSearch(std::uint64_t A, std::uint64_t B, std::uint64_t p, std::uint64_t top)
      : A_(A), B_(B), p_(p), top_(top) {}

  // pivot: 0 -> Z, 1 -> X, 2 -> Y. depth = 2 v(dF/dpivot) + 1.
  bool run(int pivot, unsigned depth) {
    // With the pivot fixed to 1, F = K + alpha s^2 + beta t^2.
    const std::uint64_t mA = (top_ - A_ % top_) % top_, mB = (top_ - B_ % top_) % top_;
    switch (pivot) {
      case 0: K_ = 1 % top_, alpha_ = mA, beta_ = mB; break;
      case 1: K_ = mA, alpha_ = mB, beta_ = 1 % top_; break;
      default: K_ = mB, alpha_ = mA, beta_ = 1 % top_; break;
    }
    depth_ = depth;
    return extend(0, 0, 0, 1);
  }

 private:
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return m < (std::uint64_t{1} << 32) ? a * b % m : mulmod(a, b, m);
  }
  static std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    const std::uint64_t r = a + b;
    return r >= m ? r - m : r;
  }

  // s, t are known modulo pj = p^level and satisfy F == 0 mod pj. Every
  // digit pair (ds, dt) is tried; beta t^2 is updated by differences.
  bool extend(unsigned level, std::uint64_t s, std::uint64_t t, std::uint64_t pj) {
    if (level == depth_) return true;
    const std::uint64_t m = pj * p_;
    const std::uint64_t K = K_ % m, alpha = alpha_ % m, beta = beta_ % m;
    const std::uint64_t pj2 = mul(pj % m, pj % m, m);
    const std::uint64_t step = mul(beta, mul(2, pj2, m), m);
    for (std::uint64_t ds = 0; ds < p_; ++ds) {
      const std::uint64_t s2 = s + ds * pj;
      const std::uint64_t u = add(K, mul(alpha, mul(s2 % m, s2 % m, m), m), m);
      // w = beta t2^2 and delta = w(dt + 1) - w(dt), both mod m.
      std::uint64_t w = mul(beta, mul(t % m, t % m, m), m);
      std::uint64_t delta = mul(beta, add(mul(2 * (t % m) % m, pj % m, m), pj2, m), m);
      for (std::uint64_t dt = 0; dt < p_; ++dt) {
        if (add(u, w, m) == 0 && extend(level + 1, s2, t + dt * pj, m)) return true;
        w = add(w, delta, m);
        delta = add(delta, step, m);
      }
    }
    return false;
  }

  std::uint64_t A_, B_, p_, top_;
  std::uint64_t K_ = 0, alpha_ = 0, beta_ = 0;
  unsigned depth_ = 1;
};

}  // namespace

OracleCoefficient oracle_reduce(const Rational& a, std::uint64_t p) {
  if (a.is_zero()) throw DomainError("oracle: zero coefficient");
  const Integer pz(static_cast<unsigned long>(p));
  const int v = arith::valuation(a, pz);
  if (std::abs(v) > 4) throw DomainError("oracle: |v_p| must be at most 4");
  Integer n = a.num(), d = a.den();
  for (int i = 0; i < v; ++i) n /= pz;
  for (int i = 0; i < -v; ++i) d /= pz;
  const std::uint64_t top = upow(p, precision_for(p));
  const auto nr = static_cast<std::uint64_t>(mpz_fdiv_ui(n.get_mpz_t(), top));
  const auto dr = static_cast<std::uint64_t>(mpz_fdiv_ui(d.get_mpz_t(), top));
  return {((v % 2) + 2) % 2, mulmod(nr, inverse_mod(dr, top), top)};
}

int solve_local_conic(OracleCoefficient a, OracleCoefficient b, std::uint64_t p) {
  const unsigned v2 = p == 2 ? 1 : 0;
  const std::uint64_t top = upow(p, precision_for(p));
  const std::uint64_t A = mulmod(a.unit, a.parity ? p : 1, top);
  const std::uint64_t B = mulmod(b.unit, b.parity ? p : 1, top);
  ConicSearch search(A, B, p, top);
  const std::array<unsigned, 3> e{v2, v2 + static_cast<unsigned>(a.parity), v2 + static_cast<unsigned>(b.parity)};
  for (int pivot = 0; pivot < 3; ++pivot) {
    if (search.run(pivot, 2 * e[static_cast<std::size_t>(pivot)] + 1)) return 1;
  }
  return -1;
}

int hilbert_oracle(const Rational& a, const Rational& b, const Integer& p, OracleOptions options) {
  if (a.is_zero() || b.is_zero()) throw DomainError("oracle: coefficients must be nonzero");
  if (!arith::is_prime(p)) throw DomainError("oracle: " + p.get_str() + " is not prime");
  if (p == 2 && !options.allow_two) throw DomainError("oracle: p = 2 requires the allow_two option");
  if (p > kOracleMaxPrime) throw UnsupportedError("oracle: prime too large for exhaustive search");
  const std::uint64_t pu = p.get_ui();
  return solve_local_conic(oracle_reduce(a, pu), oracle_reduce(b, pu), pu);
}

int hilbert_oracle_real(const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("oracle: coefficients must be nonzero");
  return (a.sign() < 0 && b.sign() < 0) ? -1 : 1;
}

}  // namespace brauer::local
