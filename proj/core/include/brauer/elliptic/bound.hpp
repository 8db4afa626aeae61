#pragma once

#include <map>
#include <string>
#include <vector>

#include "brauer/elliptic/curve.hpp"
#include "brauer/local/place.hpp"
#include "brauer/report.hpp"

namespace brauer::elliptic {

using local::PlaceQ;

/// Why a place belongs to the exceptional set S.
enum class PlaceTag {
  Archimedean,
  DividesTwo,
  DividesDiscriminant,
  NegativeCoefficientValuation,
  UserAdded,
};

std::string to_string(PlaceTag tag);

/// Finite set of places of Q with the reasons each one was included.
class ExceptionalSet {
 public:
  void add(const PlaceQ& v, PlaceTag tag);

  const std::map<PlaceQ, std::vector<PlaceTag>>& entries() const { return entries_; }
  std::vector<PlaceQ> places() const;
  std::size_t size() const { return entries_.size(); }
  std::size_t finite_count() const;
  bool contains(const PlaceQ& v) const { return entries_.count(v) != 0; }
  std::string str() const;

 private:
  std::map<PlaceQ, std::vector<PlaceTag>> entries_;
};

/// Smallest S holding the real place, the primes over 2, the primes of the
/// discriminant and the primes where alpha, beta or gamma has negative
/// valuation, together with `extra`.
ExceptionalSet build_exceptional_set(const WeierstrassCurve& E, const std::vector<PlaceQ>& extra = {});

/// |U_S / U_S^2| for Q: U_S = {+-1} x Z^(#finite places of S), so 2^(1 + #finite).
/// DomainError when S lacks the real place.
Integer s_unit_square_classes(const ExceptionalSet& S);

/// |2Cl_S(Q)|; the class group of Q is trivial.
Integer two_class_group_order(const ExceptionalSet& S);

struct EllipticGenusBound {
  GenusBoundReport report;  // factors: two_power, cl_factor, unit_factor
  ExceptionalSet exceptional;
  int complex_places = 0;   // c
  int t = 1;                // c + 1
};

/// 2^(|S| - t) * |2Cl_S|^2 * |U_S/U_S^2|^2, bounding the genus of any
/// quaternion division algebra over Q(E).
EllipticGenusBound elliptic_genus_bound(const WeierstrassCurve& E, const std::vector<PlaceQ>& extra = {});

}  // namespace brauer::elliptic
