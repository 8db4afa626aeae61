#include "brauer/arith/poly_fp.hpp"

#include <random>
#include <sstream>

#include "brauer/arith/number_theory.hpp"

namespace brauer::arith {

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32)) throw UnsupportedError("characteristic must be below 2^32");
  if (!is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::uint64_t PrimeModulus::reduce(std::int64_t c) const {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = c % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t PrimeModulus::pow(std::uint64_t b, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  b %= p_;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeModulus::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DomainError("zero has no inverse in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

PolyFp::PolyFp(PrimeModulus p, const std::vector<std::int64_t>& coeffs) : p_(p) {
  c_.reserve(coeffs.size());
  for (auto c : coeffs) c_.push_back(p_.reduce(c));
  strip();
}

void PolyFp::strip() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void PolyFp::require_same_field(const PolyFp& o) const {
  if (!(p_ == o.p_)) throw DomainError("polynomials over different prime fields");
}

PolyFp PolyFp::constant_like(Coeff c) const { return PolyFp(p_, {c % p_.value()}, 0); }

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  return scaled(p_.inv(leading()));
}

PolyFp PolyFp::scaled(Coeff c) const {
  std::vector<Coeff> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = p_.mul(c_[i], c % p_.value());
  return PolyFp(p_, std::move(out), 0);
}

PolyFp PolyFp::derivative() const {
  if (c_.size() <= 1) return zero_like();
  std::vector<Coeff> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = p_.mul(c_[i], i % p_.value());
  return PolyFp(p_, std::move(out), 0);
}

PolyFp PolyFp::reversed() const { return PolyFp(p_, std::vector<Coeff>(c_.rbegin(), c_.rend()), 0); }

PolyFp::Coeff PolyFp::eval(Coeff at) const {
  Coeff acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = p_.add(p_.mul(acc, at % p_.value()), c_[i]);
  return acc;
}

std::string PolyFp::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

PolyFp PolyFp::operator-() const {
  std::vector<Coeff> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = p_.sub(0, c_[i]);
  return PolyFp(p_, std::move(out), 0);
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  a.require_same_field(b);
  std::vector<PolyFp::Coeff> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.p_.add(a.coeff(i), b.coeff(i));
  return PolyFp(a.p_, std::move(out), 0);
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  a.require_same_field(b);
  std::vector<PolyFp::Coeff> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.p_.sub(a.coeff(i), b.coeff(i));
  return PolyFp(a.p_, std::move(out), 0);
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return a.zero_like();
  const std::uint64_t p = a.p_.value();
  std::vector<PolyFp::Coeff> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = (out[i + j] + a.c_[i] * b.c_[j]) % p;
  }
  return PolyFp(a.p_, std::move(out), 0);
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
  a.require_same_field(b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {a.zero_like(), a};
  const PrimeModulus& F = a.p_;
  std::vector<PolyFp::Coeff> rem = a.c_;
  std::vector<PolyFp::Coeff> quo(a.c_.size() - b.c_.size() + 1, 0);
  const auto lead_inv = F.inv(b.leading());
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    const auto c = F.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b.c_[j]));
  }
  rem.resize(db);
  return {PolyFp(F, std::move(quo), 0), PolyFp(F, std::move(rem), 0)};
}

std::strong_ordering operator<=>(const PolyFp& a, const PolyFp& b) {
  if (auto c = a.p_.value() <=> b.p_.value(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Integer residue_field_size(const PolyFp& pi) {
  return ipow(Integer(static_cast<unsigned long>(pi.characteristic())), static_cast<unsigned long>(pi.degree()));
}

bool is_irreducible(const PolyFp& f_in) {
  if (f_in.degree() <= 0) return false;
  if (f_in.degree() == 1) return true;
  const PolyFp f = f_in.monic();
  const PolyFp x = f.x_like();
  const Integer p(static_cast<unsigned long>(f.characteristic()));
  PolyFp h = x;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = pow_mod(h, p, f);
    if (gcd(h - x, f).degree() > 0) return false;
  }
  return true;
}

namespace {

using Factors = std::vector<PolyFactor<PolyFp>>;

// Replaces f(x) = g(x^p) by g(x); valid when f' = 0.
PolyFp pth_root(const PolyFp& f) {
  const std::size_t p = f.characteristic();
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(static_cast<std::int64_t>(f.coeffs()[i]));
  return PolyFp(f.modulus(), out);
}

// Monic input; output pairs (squarefree part, multiplicity).
void squarefree_decompose(const PolyFp& f, unsigned scale, Factors& out) {
  if (f.degree() <= 0) return;
  const std::size_t p = f.characteristic();
  const PolyFp df = f.derivative();
  if (df.is_zero()) {
    squarefree_decompose(pth_root(f), scale * static_cast<unsigned>(p), out);
    return;
  }
  PolyFp c = gcd(f, df);
  PolyFp w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    PolyFp y = gcd(w, c);
    PolyFp z = w / y;
    if (z.degree() > 0) out.push_back({z, i * scale});
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree_decompose(pth_root(c), scale * static_cast<unsigned>(p), out);
}

std::vector<std::pair<PolyFp, int>> distinct_degree(const PolyFp& f) {
  std::vector<std::pair<PolyFp, int>> out;
  const PolyFp x = f.x_like();
  const Integer p(static_cast<unsigned long>(f.characteristic()));
  PolyFp rest = f;
  PolyFp h = x;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = pow_mod(h, p, rest);
    PolyFp g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = rest / g;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, rest.degree());
  return out;
}

void equal_degree(const PolyFp& g, int d, std::mt19937_64& rng, std::vector<PolyFp>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const PrimeModulus F = g.modulus();
  const std::uint64_t p = F.value();
  const Integer half = (ipow(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    std::vector<std::int64_t> a(static_cast<std::size_t>(g.degree()));
    for (auto& c : a) c = static_cast<std::int64_t>(coeff(rng));
    const PolyFp r(F, a);
    if (r.degree() <= 0) continue;
    PolyFp h = gcd(r, g);
    if (h.degree() == 0) {
      PolyFp b = r.zero_like();
      if (p == 2) {
        PolyFp t = r;
        b = r;
        for (int i = 1; i < d; ++i) {
          t = t * t % g;
          b = b + t;
        }
      } else {
        b = pow_mod(r, half, g) - g.one_like();
      }
      h = gcd(b, g);
    }
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

PolyFactorization<PolyFp> poly_factor_fp(const PolyFp& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  PolyFactorization<PolyFp> result{f.leading(), {}};
  Factors squarefree;
  squarefree_decompose(f.monic(), 1, squarefree);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (const auto& [part, mult] : squarefree) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<PolyFp> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) result.factors.push_back({std::move(piece), mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return a.factor < b.factor; });
  return result;
}

bool is_square_fq(const PolyFp& r, const PolyFp& pi) {
  if (pi.characteristic() == 2) throw DomainError("square classes in characteristic 2 are out of scope");
  if (!is_irreducible(pi)) throw DomainError(pi.str() + " is not irreducible");
  const PolyFp red = r % pi;
  if (red.is_zero()) throw DomainError("zero has no square class");
  const Integer e = (residue_field_size(pi) - 1) / 2;
  return pow_mod(red, e, pi).is_one();
}

}  // namespace brauer::arith
