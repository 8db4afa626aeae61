#pragma once

#include <cstddef>
#include <optional>

#include "brauer/ff/residue.hpp"
#include "brauer/report.hpp"

namespace brauer::ff {

struct FunctionFieldGenusBound {
  GenusBoundReport report;
  unsigned degree = 2;
  /// r = |Ram_V(D)|; over Q(x) this counts proven ramified places only.
  std::size_t ramified_places = 0;
  std::size_t unresolved_places = 0;
};

/// |gen(D) ∩ nBr(K)| <= |nBr(K)_V| * phi(n)^r over F_p(x). The unramified
/// Brauer group of F_p(x) relative to all geometric places is trivial, so its
/// order defaults to 1; pass `unramified_order` to override.
FunctionFieldGenusBound genus_bound(const SymbolAlgebraFp& D,
                                    std::optional<Integer> unramified_order = std::nullopt);

/// Over Q(x) with n = 2: M * N * phi(2)^r, where M = |2Br(K)_ur / 2Br(Q)| = 1
/// and N = 1 bounds the genus of exponent-2 algebras over Q. `unramified_order`
/// overrides M. UnsupportedError for n != 2.
FunctionFieldGenusBound genus_bound(const SymbolAlgebraQ& D,
                                    std::optional<Integer> unramified_order = std::nullopt);

}  // namespace brauer::ff
