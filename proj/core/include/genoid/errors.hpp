#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace genoid {

/// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Violated precondition: bad index, unknown symbol, arity clash, ...
class DomainError : public Error {
public:
  using Error::Error;
};

/// Malformed concrete syntax. `position` is a 0-based byte offset into the input.
class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at offset " + std::to_string(position) + ")"),
        position(position) {}

  std::size_t position;
};

/// A step budget ran out where exhaustion is not an acceptable answer.
class FuelError : public Error {
public:
  using Error::Error;
};

/// A finite-model search was asked to enumerate more than its cap allows.
class CapacityError : public Error {
public:
  CapacityError(const std::string& message, std::uint64_t estimate)
      : Error(message), estimate(estimate) {}

  std::uint64_t estimate;
};

} // namespace genoid
