#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "brauer/arith/rational.hpp"

namespace brauer {

/// One multiplicative factor of a bound, with the result it comes from.
struct BoundFactor {
  std::string name;
  Integer value;
  std::string provenance;
};

/// A genus bound assembled from named factors; bound == product of values.
struct GenusBoundReport {
  Integer bound = 1;
  std::vector<BoundFactor> factors;

  /// DomainError for an unknown name.
  const BoundFactor& factor(std::string_view name) const;
  Integer product() const;
};

}  // namespace brauer
