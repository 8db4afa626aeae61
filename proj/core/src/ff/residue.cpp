#include "brauer/ff/residue.hpp"

#include <algorithm>

#include "brauer/arith/number_theory.hpp"

namespace brauer::ff {

SymbolAlgebraFp::SymbolAlgebraFp(unsigned n, RationalFunctionFp a, RationalFunctionFp b)
    : SymbolAlgebra<PolyFp>(n, std::move(a), std::move(b)) {
  if (!(this->a().num().modulus() == this->b().num().modulus()))
    throw DomainError("symbol entries over different prime fields");
  if (n % characteristic() == 0)
    throw DomainError("degree " + std::to_string(n) + " is not prime to the characteristic " +
                      std::to_string(characteristic()));
}

namespace {

template <class Poly, class Algebra>
std::vector<FFPlace<Poly>> candidates_impl(const Algebra& D) {
  std::vector<FFPlace<Poly>> out{FFPlace<Poly>::infinity()};
  for (const auto* f : {&D.a(), &D.b()})
    for (const auto& pv : places_of(*f)) out.push_back(pv.place);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<FFPlaceFp> candidate_places(const SymbolAlgebraFp& D) { return candidates_impl<PolyFp>(D); }
std::vector<FFPlaceQ> candidate_places(const SymbolAlgebraQ& D) { return candidates_impl<PolyQ>(D); }

TameResidue tame_residue(const SymbolAlgebraFp& D, const FFPlaceFp& w) {
  const PolyFp t = tame_symbol<PolyFp>(D, w);
  const PolyFp m = residue_modulus(w, D.a().num());
  const Integer q = arith::ipow(Integer(static_cast<unsigned long>(D.characteristic())),
                                static_cast<unsigned long>(w.degree()));
  const Integer qm1 = q - 1;
  const unsigned long n = D.degree();
  const unsigned long g = mpz_gcd_ui(nullptr, qm1.get_mpz_t(), n);
  // t generates a class of order d in F_q^x/(F_q^x)^g iff d is the least
  // divisor of g with t^(d (q-1)/g) = 1.
  const Integer step = qm1 / g;
  for (const auto& d : arith::divisors(Integer(g))) {
    if (arith::pow_mod(t, Integer(step * d), m).is_one()) return {w, t, d.get_ui()};
  }
  throw Error("internal: residue class order not found");
}

std::vector<TameResidue> residues(const SymbolAlgebraFp& D) {
  std::vector<TameResidue> out;
  for (const auto& w : candidate_places(D)) out.push_back(tame_residue(D, w));
  return out;
}

std::vector<FFPlaceFp> ram_V(const SymbolAlgebraFp& D) {
  std::vector<FFPlaceFp> out;
  for (const auto& r : residues(D))
    if (!r.unramified()) out.push_back(r.place);
  return out;
}

std::string to_string(Certainty c) {
  switch (c) {
    case Certainty::Proven: return "proven";
    case Certainty::ProbablyRamified: return "probably-ramified";
    case Certainty::UnresolvedSquare: return "unresolved-square";
  }
  return "?";
}

namespace {

// Search for a prime p with pi squarefree mod p and an irreducible factor phi
// of pi mod p at which the symbol reduces to a non-square. Such a factor
// proves non-squareness: Z_(p)[x]/(pi) localized at (p, phi) is a discrete
// valuation ring of Q[x]/(pi) with residue field F_p[x]/(phi).
std::optional<std::uint64_t> nonsquare_witness(const PolyQ& t, const PolyQ& pi) {
  int good = 0;
  for (std::uint64_t p = 3; p < 20'000 && good < kWitnessPrimeSamples; p += 2) {
    if (!arith::is_prime_u64(p)) continue;
    const arith::PrimeModulus F(p);
    auto pi_bar = arith::reduce_mod(pi, F);
    auto t_bar = arith::reduce_mod(t, F);
    if (!pi_bar || !t_bar || pi_bar->degree() != pi.degree()) continue;
    const auto parts = arith::poly_factor_fp(*pi_bar);
    bool squarefree = true;
    for (const auto& f : parts.factors) squarefree = squarefree && f.multiplicity == 1;
    if (!squarefree) continue;
    bool used = false;
    for (const auto& f : parts.factors) {
      if ((*t_bar % f.factor).is_zero()) continue;
      used = true;
      if (!arith::is_square_fq(*t_bar % f.factor, f.factor)) return p;
    }
    if (used) ++good;
  }
  return std::nullopt;
}

// Exact square test in Q[x]/(pi) for deg pi = 2: with x = (-b + sqrt(D))/2
// the residue is A + B sqrt(D), and (alpha + beta sqrt(D))^2 = A + B sqrt(D)
// forces alpha^2 = (A +- sqrt(A^2 - B^2 D)) / 2.
bool is_square_quadratic(const PolyQ& t, const PolyQ& pi) {
  const Rational b = pi.coeff(1), c = pi.coeff(0);
  const Rational D = b * b - Rational(4) * c;
  const PolyQ r = t % pi;
  const Rational u = r.coeff(0), v = r.coeff(1);
  const Rational A = u - b * v / Rational(2), B = v / Rational(2);
  if (B.is_zero()) return A.is_square() || (A / D).is_square();
  const Rational N = A * A - B * B * D;
  if (!N.is_square()) return false;
  const Rational n(Integer(sqrt(N.num())), Integer(sqrt(N.den())));
  for (const Rational& root : {n, -n}) {
    const Rational alpha2 = (A + root) / Rational(2);
    if (alpha2.is_zero() || !alpha2.is_square()) continue;
    const Rational alpha(Integer(sqrt(alpha2.num())), Integer(sqrt(alpha2.den())));
    const Rational beta = B / (Rational(2) * alpha);
    if (alpha * alpha + beta * beta * D == A) return true;
  }
  return false;
}

}  // namespace

QResidueVerdict tame_residue_q(const SymbolAlgebraQ& D, const FFPlaceQ& w) {
  if (D.degree() != 2) throw UnsupportedError("residues over Q(x) are implemented for quaternion symbols only");
  QResidueVerdict out{w, tame_symbol<PolyQ>(D, w), false, Certainty::Proven, std::nullopt};
  const bool constant = out.symbol.degree() <= 0;
  // Q(sqrt(r)) has degree 2, so it lies in no field of odd degree.
  if (w.degree() % 2 == 1 && constant) {
    out.ramified = !out.symbol.coeff(0).is_square();
    return out;
  }
  if (w.degree() == 2) {
    out.ramified = !is_square_quadratic(out.symbol, w.poly());
    return out;
  }
  if (auto p = nonsquare_witness(out.symbol, w.poly())) {
    out.ramified = true;
    out.witness_prime = p;
    return out;
  }
  out.certainty = Certainty::UnresolvedSquare;
  return out;
}

std::vector<QResidueVerdict> ram_V_over_Q(const SymbolAlgebraQ& D) {
  std::vector<QResidueVerdict> out;
  for (const auto& w : candidate_places(D)) {
    auto v = tame_residue_q(D, w);
    if (v.ramified || v.certainty != Certainty::Proven) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace brauer::ff
