#pragma once

#include <stdexcept>
#include <string>

namespace realfn {

/// Malformed or out-of-contract input (bad coefficients, singular matrices,
/// intransitive constellations, ...). Maps to CLI exit code 2.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A floating-point decision could not be made consistently at the configured
/// tolerance, or two independent computations disagree. Maps to exit code 3.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace realfn
