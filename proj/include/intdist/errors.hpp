#pragma once

#include <stdexcept>
#include <string>

namespace intdist {

// Parameter outside the domain of a formula or construction.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bad request: unknown method, malformed input, N = 0 and the like.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation was called on input violating its stated precondition.
struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

// The working precision cannot settle the question asked.
struct UndecidableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace intdist
