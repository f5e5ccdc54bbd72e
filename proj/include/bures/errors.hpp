#pragma once

#include <stdexcept>
#include <string>

namespace bures {

// Coordinate outside its closed range. what() names the offending coordinate.
class RangeError : public std::out_of_range {
 public:
  RangeError(std::string coordinate, const std::string& message)
      : std::out_of_range(message), coordinate_(std::move(coordinate)) {}
  const std::string& coordinate() const noexcept { return coordinate_; }

 private:
  std::string coordinate_;
};

// Input violates a mathematical precondition (non-Hermitian, not a density matrix, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Operands of incompatible dimension, or a dimension outside {2, 3}. Caller bug.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A rejection-sampling proposal exceeded the envelope constant.
class EnvelopeViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bures
