#include "brauer/quat/quaternion.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "brauer/arith/number_theory.hpp"
#include "brauer/errors.hpp"
#include "brauer/local/hilbert.hpp"

namespace brauer::quat {

QuaternionQ::QuaternionQ(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero() || b_.is_zero()) throw DomainError("quaternion algebra entries must be nonzero");
}

RamificationSet::RamificationSet(std::vector<PlaceQ> places) : places_(std::move(places)) {
  std::sort(places_.begin(), places_.end());
  places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
  if (places_.size() % 2 != 0) throw DomainError("a ramification set over Q has even size");
}

bool RamificationSet::contains(const PlaceQ& v) const {
  return std::binary_search(places_.begin(), places_.end(), v);
}

std::string RamificationSet::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < places_.size(); ++i) {
    if (i) out += ", ";
    out += places_[i].str();
  }
  return out + "}";
}

QuadraticField::QuadraticField(const Rational& d) {
  if (d.is_zero()) throw DomainError("Q(sqrt 0) is not a field extension");
  d_ = arith::squarefree_kernel(d);
  if (d_ == 1) throw DomainError(d.str() + " is a square in Q");
}

std::vector<PlaceQ> candidate_places(const QuaternionQ& D) {
  std::vector<PlaceQ> out{PlaceQ::finite(2), PlaceQ::infinity()};
  for (const Rational* x : {&D.a(), &D.b()}) {
    for (const auto& p : arith::factor(x->num()).primes()) out.push_back(PlaceQ::finite(p));
    for (const auto& p : arith::factor(x->den()).primes()) out.push_back(PlaceQ::finite(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RamificationSet ramification_set(const QuaternionQ& D) {
  std::vector<PlaceQ> ramified;
  for (const auto& v : candidate_places(D)) {
    if (local::hilbert(D.a(), D.b(), v) == -1) ramified.push_back(v);
  }
  return RamificationSet(std::move(ramified));
}

bool is_division(const QuaternionQ& D) { return !ramification_set(D).empty(); }

bool is_isomorphic(const QuaternionQ& D1, const QuaternionQ& D2) {
  return ramification_set(D1) == ramification_set(D2);
}

namespace {

bool embeds_given(const Integer& d, const RamificationSet& ram) {
  return std::all_of(ram.places().begin(), ram.places().end(),
                     [&](const PlaceQ& v) { return !local::square_class(Rational(d), v).is_identity(); });
}

RamificationSet require_division(const QuaternionQ& D) {
  RamificationSet ram = ramification_set(D);
  if (ram.empty()) throw SplitAlgebraError(D.str() + " is split; every quadratic field embeds in M_2(Q)");
  return ram;
}

}  // namespace

bool embeds(const QuadraticField& field, const QuaternionQ& D) {
  return embeds_given(field.d(), require_division(D));
}

std::variant<DistinguishingWitness, NoneEquivalent> distinguishing_field(const QuaternionQ& D1,
                                                                         const QuaternionQ& D2,
                                                                         const Integer& max_abs) {
  const RamificationSet r1 = require_division(D1);
  const RamificationSet r2 = require_division(D2);
  if (r1 == r2) return NoneEquivalent{};

  std::vector<PlaceQ> only1, only2;
  std::set_difference(r1.places().begin(), r1.places().end(), r2.places().begin(), r2.places().end(),
                      std::back_inserter(only1));
  std::set_difference(r2.places().begin(), r2.places().end(), r1.places().begin(), r1.places().end(),
                      std::back_inserter(only2));
  // The pivot is the smallest place of the symmetric difference; d must be a
  // square there and a non-square throughout the other algebra's set.
  const bool pivot_in_first = only2.empty() || (!only1.empty() && only1.front() < only2.front());
  const PlaceQ pivot = pivot_in_first ? only1.front() : only2.front();
  const RamificationSet& other = pivot_in_first ? r2 : r1;

  for (Integer m = 1; m <= max_abs; ++m) {
    if (!arith::is_squarefree(m)) continue;
    for (int sign : {1, -1}) {
      const Integer d = m * sign;
      if (d == 1) continue;
      if (!local::square_class(Rational(d), pivot).is_identity()) continue;
      if (!embeds_given(d, other)) continue;
      DistinguishingWitness w{QuadraticField(Rational(d)), pivot, embeds_given(d, r1), embeds_given(d, r2)};
      if (w.embeds_in_first == w.embeds_in_second)
        throw Error("internal: witness " + d.get_str() + " does not separate the algebras");
      return w;
    }
  }
  throw SearchExhaustedError("no distinguishing field with |d| <= " + max_abs.get_str());
}

std::vector<RamificationSet> enumerate_unramified(const std::vector<PlaceQ>& S_in) {
  std::vector<PlaceQ> S = S_in;
  std::sort(S.begin(), S.end());
  S.erase(std::unique(S.begin(), S.end()), S.end());
  if (S.empty() || !S.back().is_infinite()) throw DomainError("S must contain the real place");
  if (S.size() < 2) throw DomainError("S must contain at least one finite place besides the real one");
  if (S.size() > 24) throw UnsupportedError("enumeration limited to |S| <= 24");

  std::vector<RamificationSet> out;
  const std::uint32_t n = static_cast<std::uint32_t>(S.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    std::vector<PlaceQ> subset;
    for (std::uint32_t i = 0; i < n; ++i)
      if (mask & (std::uint32_t{1} << i)) subset.push_back(S[i]);
    out.emplace_back(std::move(subset));
  }
  return out;
}

}  // namespace brauer::quat
