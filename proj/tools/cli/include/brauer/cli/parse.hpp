#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "brauer/elliptic/curve.hpp"
#include "brauer/errors.hpp"
#include "brauer/ff/residue.hpp"
#include "brauer/local/place.hpp"
#include "brauer/quat/quaternion.hpp"

namespace brauer::cli {

/// Malformed input; `column` is 1-based within the text handed to the parser.
class ParseError : public Error {
 public:
  ParseError(std::size_t column, const std::string& what);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

using Algebra = std::variant<quat::QuaternionQ, ff::SymbolAlgebraFp, ff::SymbolAlgebraQ>;

/// Integers or p/q, with an optional sign.
Rational parse_rational(std::string_view text);

/// Expression in x over Q: + - * / ^, parentheses, implicit products ("3x^2").
ff::RationalFunctionQ parse_function_q(std::string_view text);
/// Same grammar, coefficients reduced mod p; ParseError when a denominator vanishes mod p.
ff::RationalFunctionFp parse_function_fp(std::string_view text, const arith::PrimeModulus& p);

/// "(a, b)" with rational a, b, or "(f, g; n=N, k=FP|Q)" with f, g in x.
Algebra parse_algebra(std::string_view text);

/// "y^2 = <monic cubic in x>" or "roots = a, b, c".
elliptic::WeierstrassCurve parse_curve(std::string_view text);

/// Comma-separated places: primes, "inf" or "oo".
std::vector<local::PlaceQ> parse_places(std::string_view text);

}  // namespace brauer::cli
