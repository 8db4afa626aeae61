#include "brauer/elliptic/bound.hpp"

#include <algorithm>

#include "brauer/arith/number_theory.hpp"
#include "brauer/errors.hpp"

namespace brauer::elliptic {

std::string to_string(PlaceTag tag) {
  switch (tag) {
    case PlaceTag::Archimedean: return "archimedean";
    case PlaceTag::DividesTwo: return "divides-2";
    case PlaceTag::DividesDiscriminant: return "divides-discriminant";
    case PlaceTag::NegativeCoefficientValuation: return "negative-coefficient-valuation";
    case PlaceTag::UserAdded: return "user-added";
  }
  return "?";
}

void ExceptionalSet::add(const PlaceQ& v, PlaceTag tag) {
  auto& tags = entries_[v];
  if (std::find(tags.begin(), tags.end(), tag) == tags.end()) tags.push_back(tag);
}

std::vector<PlaceQ> ExceptionalSet::places() const {
  std::vector<PlaceQ> out;
  for (const auto& kv : entries_) out.push_back(kv.first);
  return out;
}

std::size_t ExceptionalSet::finite_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& kv) { return kv.first.is_finite(); }));
}

std::string ExceptionalSet::str() const {
  std::string out = "{";
  bool first = true;
  for (const auto& kv : entries_) {
    if (!first) out += ", ";
    first = false;
    out += kv.first.str();
  }
  return out + "}";
}

ExceptionalSet build_exceptional_set(const WeierstrassCurve& E, const std::vector<PlaceQ>& extra) {
  ExceptionalSet S;
  S.add(PlaceQ::infinity(), PlaceTag::Archimedean);
  S.add(PlaceQ::finite(2), PlaceTag::DividesTwo);
  const Rational& delta = E.discriminant();
  for (const Integer* part : {&delta.raw().get_num(), &delta.raw().get_den()}) {
    if (*part == 1) continue;
    for (const auto& p : arith::factor(*part).primes()) S.add(PlaceQ::finite(p), PlaceTag::DividesDiscriminant);
  }
  for (const Rational* coeff : {&E.alpha(), &E.beta(), &E.gamma()}) {
    if (coeff->is_integer()) continue;
    for (const auto& p : arith::factor(coeff->den()).primes())
      S.add(PlaceQ::finite(p), PlaceTag::NegativeCoefficientValuation);
  }
  for (const auto& v : extra) S.add(v, PlaceTag::UserAdded);
  return S;
}

Integer s_unit_square_classes(const ExceptionalSet& S) {
  if (!S.contains(PlaceQ::infinity())) throw DomainError("S must contain the real place");
  return arith::ipow(Integer(2), 1 + S.finite_count());
}

Integer two_class_group_order(const ExceptionalSet&) { return 1; }

EllipticGenusBound elliptic_genus_bound(const WeierstrassCurve& E, const std::vector<PlaceQ>& extra) {
  EllipticGenusBound out;
  out.exceptional = build_exceptional_set(E, extra);
  out.complex_places = 0;
  out.t = out.complex_places + 1;
  const Integer units = s_unit_square_classes(out.exceptional);
  const Integer cl = two_class_group_order(out.exceptional);
  out.report.factors = {
      {"two_power", arith::ipow(Integer(2), out.exceptional.size() - static_cast<std::size_t>(out.t)),
       "2^(|S|-t): classes of 2Br(Q) unramified outside S"},
      {"cl_factor", Integer(cl * cl), "|2Cl_S(Q)|^2 with Cl(Q) trivial"},
      {"unit_factor", Integer(units * units), "|U_S/U_S^2|^2 with U_S = {+-1} x Z^#finite(S)"},
  };
  out.report.bound = out.report.product();
  return out;
}

}  // namespace brauer::elliptic
