#include "brauer/arith/poly_q.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "brauer/arith/number_theory.hpp"

namespace brauer::arith {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

void PolyQ::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

PolyQ PolyQ::scaled(const Rational& c) const {
  std::vector<Rational> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i] * c;
  return PolyQ(std::move(out));
}

PolyQ PolyQ::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return PolyQ(std::move(out));
}

PolyQ PolyQ::reversed() const { return PolyQ(std::vector<Rational>(c_.rbegin(), c_.rend())); }

Rational PolyQ::eval(const Rational& at) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

std::pair<std::vector<Integer>, Rational> PolyQ::primitive_model() const {
  if (is_zero()) throw DomainError("zero polynomial has no primitive model");
  Integer den_lcm = 1;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
  std::vector<Integer> ints(c_.size());
  Integer content = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    ints[i] = c_[i].num() * (den_lcm / c_[i].den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return {std::move(ints), Rational(content, den_lcm)};
}

std::string PolyQ::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != Rational(1)) {
      if (!mag.is_integer() && i > 0)
        os << '(' << mag.str() << ')';
      else
        os << mag.str();
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

PolyQ PolyQ::operator-() const { return scaled(Rational(-1)); }

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return PolyQ(std::move(out));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
  std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return PolyQ(std::move(out));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyQ(std::move(out));
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {PolyQ{}, a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
  const Rational lead_inv = b.leading().inverse();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const Rational c = rem[i] * lead_inv;
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b.c_[j];
  }
  rem.resize(db);
  return {PolyQ(std::move(quo)), PolyQ(std::move(rem))};
}

std::strong_ordering operator<=>(const PolyQ& a, const PolyQ& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::optional<PolyFp> reduce_mod(const PolyQ& f, PrimeModulus p) {
  const Integer pz(static_cast<unsigned long>(p.value()));
  std::vector<std::int64_t> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    if (mpz_divisible_p(c.den().get_mpz_t(), pz.get_mpz_t())) return std::nullopt;
    const auto n = static_cast<std::uint64_t>(mpz_fdiv_ui(c.num().get_mpz_t(), p.value()));
    const auto d = static_cast<std::uint64_t>(mpz_fdiv_ui(c.den().get_mpz_t(), p.value()));
    out.push_back(static_cast<std::int64_t>(p.mul(n, p.inv(d))));
  }
  return PolyFp(p, out);
}

std::vector<Rational> rational_roots(const PolyQ& f) {
  if (f.is_zero()) throw DomainError("the zero polynomial has every root");
  std::vector<Rational> roots;
  if (f.degree() <= 0) return roots;
  auto [model, scale] = f.primitive_model();
  std::size_t low = 0;
  while (model[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (low + 1 == model.size()) return roots;
  const auto num_divs = divisors(abs(model[low]));
  const auto den_divs = divisors(abs(model.back()));
  std::set<Rational> found;
  for (const auto& r : num_divs) {
    for (const auto& s : den_divs) {
      for (int sign : {1, -1}) {
        Rational cand(Integer(r * sign), s);
        if (found.count(cand)) continue;
        if (f.eval(cand).is_zero()) found.insert(cand);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Factor degrees compatible with the factorization pattern modulo several
// primes of good reduction. Always contains 0 and deg h.
std::set<int> degree_sieve(const PolyQ& h) {
  const int n = h.degree();
  std::set<int> allowed;
  for (int d = 0; d <= n; ++d) allowed.insert(d);
  int good = 0;
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73}) {
    const PrimeModulus F(p);
    auto red = reduce_mod(h, F);
    if (!red || red->degree() != n) continue;
    if (gcd(*red, red->derivative()).degree() > 0) continue;
    std::set<int> sums{0};
    for (const auto& pf : poly_factor_fp(*red).factors) {
      std::set<int> next = sums;
      for (int s : sums) next.insert(s + pf.factor.degree());
      sums = std::move(next);
    }
    std::set<int> meet;
    std::set_intersection(allowed.begin(), allowed.end(), sums.begin(), sums.end(),
                          std::inserter(meet, meet.begin()));
    allowed = std::move(meet);
    if (allowed.size() == 2 || ++good >= 8) break;
  }
  return allowed;
}

Integer eval_int(const std::vector<Integer>& model, long at) {
  Integer acc = 0;
  for (std::size_t i = model.size(); i-- > 0;) acc = acc * at + model[i];
  return acc;
}

// Kronecker's method: an integer factor of degree d is pinned down by its
// values at d + 1 points, each dividing the value of h there.
std::optional<PolyQ> kronecker_factor(const PolyQ& h, int d) {
  const auto [model, scale] = h.primitive_model();
  std::vector<std::pair<long, Integer>> pts;
  pts.emplace_back(0, eval_int(model, 0));
  for (long x = 1; x <= 12; ++x) {
    pts.emplace_back(x, eval_int(model, x));
    pts.emplace_back(-x, eval_int(model, -x));
  }
  std::vector<std::pair<std::size_t, std::size_t>> ranked;  // (divisor count, index)
  for (std::size_t i = 0; i < pts.size(); ++i) ranked.emplace_back(divisors(abs(pts[i].second)).size(), i);
  std::sort(ranked.begin(), ranked.end());
  const std::size_t k = static_cast<std::size_t>(d) + 1;

  std::vector<Rational> xs;
  std::vector<std::vector<Integer>> choices;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& [x, val] = pts[ranked[j].second];
    xs.emplace_back(x);
    std::vector<Integer> c;
    for (const auto& dv : divisors(abs(val))) {
      c.push_back(dv);
      if (j > 0) c.push_back(-dv);
    }
    choices.push_back(std::move(c));
  }
  std::vector<PolyQ> basis;
  for (std::size_t i = 0; i < k; ++i) {
    PolyQ l = PolyQ::constant(1);
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      l = l * PolyQ({-xs[j], Rational(1)});
      l = l.scaled((xs[i] - xs[j]).inverse());
    }
    basis.push_back(std::move(l));
  }
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    PolyQ g;
    for (std::size_t i = 0; i < k; ++i) g = g + basis[i].scaled(Rational(choices[i][idx[i]]));
    if (g.degree() == d &&
        std::all_of(g.coeffs().begin(), g.coeffs().end(), [](const Rational& c) { return c.is_integer(); }) &&
        (h % g).is_zero()) {
      return g.monic();
    }
    std::size_t pos = 0;
    while (pos < k && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == k) return std::nullopt;
  }
}

void split_squarefree(const PolyQ& s, std::vector<PolyQ>& out) {
  if (s.degree() <= 0) return;
  if (s.degree() == 1) {
    out.push_back(s.monic());
    return;
  }
  PolyQ rest = s.monic();
  for (const auto& r : rational_roots(rest)) {
    PolyQ lin({-r, Rational(1)});
    out.push_back(lin);
    rest = rest / lin;
  }
  if (rest.degree() <= 0) return;
  if (rest.degree() <= 3) {
    out.push_back(rest);
    return;
  }
  const std::set<int> allowed = degree_sieve(rest);
  const int n = rest.degree();
  std::vector<int> candidates;
  for (int d : allowed)
    if (d >= 2 && 2 * d <= n) candidates.push_back(d);
  if (candidates.empty()) {
    out.push_back(rest);
    return;
  }
  if (n > kMaxFactorSearchDegree)
    throw UnsupportedError("cannot certify the factorization of " + rest.str() + " (degree above " +
                           std::to_string(kMaxFactorSearchDegree) + ")");
  for (int d : candidates) {
    if (auto g = kronecker_factor(rest, d)) {
      split_squarefree(*g, out);
      split_squarefree(rest / *g, out);
      return;
    }
  }
  out.push_back(rest);
}

}  // namespace

PolyFactorization<PolyQ> poly_factor_q(const PolyQ& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  PolyFactorization<PolyQ> result{f.leading(), {}};
  if (f.degree() == 0) return result;
  // Yun's squarefree decomposition.
  const PolyQ g = f.monic();
  const PolyQ dg = g.derivative();
  const PolyQ a0 = gcd(g, dg);
  PolyQ b = g / a0;
  PolyQ c = dg / a0;
  PolyQ d = c - b.derivative();
  for (unsigned i = 1; b.degree() > 0; ++i) {
    PolyQ a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    std::vector<PolyQ> pieces;
    split_squarefree(a, pieces);
    for (auto& piece : pieces) result.factors.push_back({std::move(piece), i});
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& x, const auto& y) { return x.factor < y.factor; });
  return result;
}

bool is_irreducible(const PolyQ& f) {
  if (f.degree() <= 0) return false;
  const auto fac = poly_factor_q(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

}  // namespace brauer::arith
