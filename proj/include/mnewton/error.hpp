#pragma once

#include <stdexcept>
#include <string>

namespace mnewton {

/// Malformed arguments: bad dimensions, out-of-range indices, infeasible
/// parameters, inputs over a size cap without override.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative construction (power iteration, root polishing) did not converge.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mnewton
