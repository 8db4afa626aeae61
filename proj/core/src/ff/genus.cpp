#include "brauer/ff/genus.hpp"

#include "brauer/arith/number_theory.hpp"

namespace brauer::ff {

namespace {

Integer checked_order(const std::optional<Integer>& given) {
  if (given && *given < 1) throw DomainError("unramified Brauer group order must be positive");
  return given.value_or(Integer(1));
}

}  // namespace

FunctionFieldGenusBound genus_bound(const SymbolAlgebraFp& D, std::optional<Integer> unramified_order) {
  FunctionFieldGenusBound out;
  out.degree = D.degree();
  out.ramified_places = ram_V(D).size();
  const Integer phi(static_cast<unsigned long>(arith::euler_phi(D.degree())));
  out.report.factors = {
      {"unramified_order", checked_order(unramified_order),
       unramified_order ? "supplied by caller" : "unramified Brauer group of F_p(x) is trivial"},
      {"phi_power", arith::ipow(phi, out.ramified_places), "phi(n)^r with r = |Ram_V(D)| (residue-map genus bound)"},
  };
  out.report.bound = out.report.product();
  return out;
}

FunctionFieldGenusBound genus_bound(const SymbolAlgebraQ& D, std::optional<Integer> unramified_order) {
  if (D.degree() != 2) throw UnsupportedError("genus bounds over Q(x) are implemented for n = 2 only");
  FunctionFieldGenusBound out;
  out.degree = 2;
  for (const auto& v : ram_V_over_Q(D)) {
    if (v.ramified)
      ++out.ramified_places;
    else
      ++out.unresolved_places;
  }
  out.report.factors = {
      {"unramified_quotient", checked_order(unramified_order),
       unramified_order ? "supplied by caller"
                        : "unramified Brauer group of k(x) is the image of Br(k) (M = 1)"},
      {"base_genus", Integer(1), "exponent-2 genus over Q is a single class (N = 1)"},
      {"phi_power", Integer(1), "phi(2)^r = 1 for every r"},
  };
  out.report.bound = out.report.product();
  return out;
}

}  // namespace brauer::ff
