#include "brauer/ff/places.hpp"

#include <algorithm>

namespace brauer::ff {

namespace {

template <class Poly, class Factor>
std::vector<PlaceValuation<Poly>> places_of_impl(const RationalFunction<Poly>& f, Factor factor) {
  if (f.is_zero()) throw DomainError("the zero function has infinite valuation everywhere");
  std::vector<PlaceValuation<Poly>> out;
  if (f.num().degree() > 0)
    for (const auto& pf : factor(f.num()).factors)
      out.push_back({FFPlace<Poly>::from_irreducible_factor(pf.factor), static_cast<int>(pf.multiplicity)});
  if (f.den().degree() > 0)
    for (const auto& pf : factor(f.den()).factors)
      out.push_back({FFPlace<Poly>::from_irreducible_factor(pf.factor), -static_cast<int>(pf.multiplicity)});
  if (int v = f.den().degree() - f.num().degree(); v != 0) out.push_back({FFPlace<Poly>::infinity(), v});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.place < b.place; });
  return out;
}

}  // namespace

std::vector<PlaceValuation<PolyFp>> places_of(const RationalFunctionFp& f) {
  return places_of_impl(f, [](const PolyFp& p) { return arith::poly_factor_fp(p); });
}

std::vector<PlaceValuation<PolyQ>> places_of(const RationalFunctionQ& f) {
  return places_of_impl(f, [](const PolyQ& p) { return arith::poly_factor_q(p); });
}

}  // namespace brauer::ff
