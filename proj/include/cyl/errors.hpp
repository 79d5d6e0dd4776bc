#pragma once

#include <stdexcept>
#include <string>

namespace cyl {

/// Argument outside the supported evaluation box or type invariant.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation's precondition does not hold (bad counts, empty overlap,
/// degenerate inputs).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative method failed to converge or lost its bracket.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyl
