#pragma once

#include <stdexcept>
#include <string>

namespace weilcert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation
/// (log of a non-positive enclosure, constant polynomial where a
/// nonconstant one is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive precision hit its cap without deciding the question.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

}  // namespace weilcert
