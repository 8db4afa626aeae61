#pragma once

#include <string>
#include <variant>
#include <vector>

#include "brauer/arith/rational.hpp"
#include "brauer/local/place.hpp"

namespace brauer::quat {

using local::PlaceQ;

/// The quaternion algebra (a, b) over Q: i^2 = a, j^2 = b, ij = -ji.
/// A presentation, not a canonical form.
class QuaternionQ {
 public:
  /// DomainError when a or b is zero.
  QuaternionQ(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::string str() const { return "(" + a_.str() + ", " + b_.str() + ")"; }

 private:
  Rational a_;
  Rational b_;
};

/// Sorted set of places where an algebra does not split.
class RamificationSet {
 public:
  RamificationSet() = default;
  /// Sorts and deduplicates. DomainError for odd cardinality, which no
  /// class of Br(Q) can have.
  explicit RamificationSet(std::vector<PlaceQ> places);

  const std::vector<PlaceQ>& places() const { return places_; }
  std::size_t size() const { return places_.size(); }
  bool empty() const { return places_.empty(); }
  bool contains(const PlaceQ& v) const;
  std::string str() const;

  friend bool operator==(const RamificationSet&, const RamificationSet&) = default;

 private:
  std::vector<PlaceQ> places_;
};

/// Q(sqrt d), stored by the squarefree representative of d modulo squares.
class QuadraticField {
 public:
  /// DomainError when d is zero or a rational square.
  explicit QuadraticField(const Rational& d);

  const Integer& d() const { return d_; }
  std::string str() const { return "Q(sqrt(" + d_.get_str() + "))"; }
  friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

 private:
  Integer d_;
};

/// Places that can ramify: primes dividing a or b (numerators and
/// denominators), 2, and the real place.
std::vector<PlaceQ> candidate_places(const QuaternionQ& D);

RamificationSet ramification_set(const QuaternionQ& D);
bool is_division(const QuaternionQ& D);
/// Same class in Br(Q), hence isomorphic as 4-dimensional algebras.
bool is_isomorphic(const QuaternionQ& D1, const QuaternionQ& D2);

/// Q(sqrt d) embeds in D iff d is a local non-square at every ramified
/// place. SplitAlgebraError when D is split.
bool embeds(const QuadraticField& field, const QuaternionQ& D);

struct NoneEquivalent {
  friend bool operator==(const NoneEquivalent&, const NoneEquivalent&) = default;
};

struct DistinguishingWitness {
  QuadraticField field;
  /// Place of one ramification set missing from the other; d is a local
  /// square there.
  PlaceQ pivot;
  bool embeds_in_first = false;
  bool embeds_in_second = false;
};

inline const Integer& default_witness_bound() {
  static const Integer bound(1'000'000);
  return bound;
}

/// Searches squarefree d by increasing |d| (positive first on ties) for a
/// field embedding in exactly one of the two algebras. Returns
/// NoneEquivalent when the ramification sets agree. SplitAlgebraError if
/// either algebra is split; SearchExhaustedError past max_abs.
std::variant<DistinguishingWitness, NoneEquivalent> distinguishing_field(
    const QuaternionQ& D1, const QuaternionQ& D2, const Integer& max_abs = default_witness_bound());

/// Ramification sets of all classes of 2Br(Q) unramified outside S, that
/// is, the even-size subsets of S. Needs the real place in S and |S| >= 2.
std::vector<RamificationSet> enumerate_unramified(const std::vector<PlaceQ>& S);

}  // namespace brauer::quat
