#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brauer/ff/places.hpp"

namespace brauer::ff {

/// Cyclic symbol algebra (a, b) of degree n over k(x).
template <arith::FieldPolynomial Poly>
class SymbolAlgebra {
 public:
  /// DomainError for zero entries or n < 2.
  SymbolAlgebra(unsigned n, RationalFunction<Poly> a, RationalFunction<Poly> b)
      : n_(n), a_(std::move(a)), b_(std::move(b)) {
    if (n_ < 2) throw DomainError("symbol degree must be at least 2");
    if (a_.is_zero() || b_.is_zero()) throw DomainError("symbol entries must be nonzero");
  }

  unsigned degree() const { return n_; }
  const RationalFunction<Poly>& a() const { return a_; }
  const RationalFunction<Poly>& b() const { return b_; }
  std::string str() const { return "(" + a_.str() + ", " + b_.str() + ")_" + std::to_string(n_); }

 private:
  unsigned n_;
  RationalFunction<Poly> a_;
  RationalFunction<Poly> b_;
};

/// Over F_p(x) the degree must be prime to p; DomainError otherwise.
class SymbolAlgebraFp : public SymbolAlgebra<PolyFp> {
 public:
  SymbolAlgebraFp(unsigned n, RationalFunctionFp a, RationalFunctionFp b);
  std::uint64_t characteristic() const { return a().num().characteristic(); }
};

using SymbolAlgebraQ = SymbolAlgebra<PolyQ>;

/// Tame symbol (-1)^(v(a)v(b)) a^v(b) b^(-v(a)) reduced into the residue
/// field at w, as a polynomial of degree below deg w.
template <arith::FieldPolynomial Poly>
Poly tame_symbol(const SymbolAlgebra<Poly>& D, const FFPlace<Poly>& w) {
  const Poly like = D.a().num();
  const Poly m = residue_modulus(w, like);
  const int va = valuation(D.a(), w);
  const int vb = valuation(D.b(), w);
  const Poly ua = unit_residue(D.a(), w);
  const Poly ub = unit_residue(D.b(), w);
  Poly t = arith::pow_mod(ua, Integer(vb), m) * arith::pow_mod(ub, Integer(-va), m) % m;
  if ((va & 1) && (vb & 1)) t = -t;
  return t;
}

/// Residue of a symbol at a place of F_p(x): the tame symbol and the order
/// of its class in F_q^x / (F_q^x)^g with g = gcd(n, q - 1).
struct TameResidue {
  FFPlaceFp place;
  PolyFp symbol;
  std::uint64_t character_order = 1;

  bool unramified() const { return character_order == 1; }
};

TameResidue tame_residue(const SymbolAlgebraFp& D, const FFPlaceFp& w);

/// Places that can carry a nontrivial residue: those of a, of b, and infinity.
std::vector<FFPlaceFp> candidate_places(const SymbolAlgebraFp& D);
std::vector<FFPlaceQ> candidate_places(const SymbolAlgebraQ& D);

/// Residues at every candidate place.
std::vector<TameResidue> residues(const SymbolAlgebraFp& D);

/// Ram_V: the places with nontrivial residue, sorted.
std::vector<FFPlaceFp> ram_V(const SymbolAlgebraFp& D);

enum class Certainty {
  Proven,
  /// Reserved for evidence-only ramification; the search below upgrades any
  /// non-square reduction straight to Proven.
  ProbablyRamified,
  UnresolvedSquare,
};

std::string to_string(Certainty c);

/// Outcome at one place of Q(x) for a quaternion symbol.
struct QResidueVerdict {
  FFPlaceQ place;
  PolyQ symbol;
  bool ramified = false;
  Certainty certainty = Certainty::Proven;
  /// Good prime at which the reduced symbol is a non-square.
  std::optional<std::uint64_t> witness_prime;
};

/// Primes of good reduction (pi squarefree mod p) sampled before giving up
/// on a square decision in Q[x]/(pi) with deg pi >= 2.
inline constexpr int kWitnessPrimeSamples = 30;

/// Exact on places of degree 1 and 2 and for constant residues at odd degree;
/// elsewhere a non-square reduction at a prime of good reduction proves
/// ramification and its absence leaves UnresolvedSquare. UnsupportedError
/// unless n = 2.
QResidueVerdict tame_residue_q(const SymbolAlgebraQ& D, const FFPlaceQ& w);

/// Places of Q(x) that are ramified (Proven) or undecided (UnresolvedSquare).
std::vector<QResidueVerdict> ram_V_over_Q(const SymbolAlgebraQ& D);

}  // namespace brauer::ff
