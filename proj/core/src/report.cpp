#include "brauer/report.hpp"

#include "brauer/errors.hpp"

namespace brauer {

const BoundFactor& GenusBoundReport::factor(std::string_view name) const {
  for (const auto& f : factors)
    if (f.name == name) return f;
  throw DomainError("no factor named '" + std::string(name) + "'");
}

Integer GenusBoundReport::product() const {
  Integer p = 1;
  for (const auto& f : factors) p *= f.value;
  return p;
}

}  // namespace brauer
