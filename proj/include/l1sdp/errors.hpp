#pragma once

#include <stdexcept>
#include <string>

namespace l1sdp {

/// Malformed or out-of-range input (bad dimensions, non-finite data, k/p out of range).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition of an operation does not hold for the given data.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// NaN/Inf encountered inside an iterative method.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace l1sdp
