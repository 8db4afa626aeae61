#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation's precondition was violated by its arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The valuation of zero was requested. It is +infinity, never an integer.
class ZeroValuationError : public DomainError {
 public:
  ZeroValuationError() : DomainError("valuation of zero is +infinity") {}
};

/// Embedding questions were asked about a split (matrix) algebra.
class SplitAlgebraError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An integer is too large for the deterministic primality certificate.
class PrimalityLimitError : public Error {
 public:
  using Error::Error;
};

/// The combination of inputs is outside what this library computes.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of candidates.
class SearchExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace brauer
