#pragma once

#include <stdexcept>
#include <string>

namespace su4 {

/// Caller passed a value outside an operation's domain (bad index, non-finite
/// angle, malformed resolution).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix offered as a density matrix broke one of its invariants. The
/// message names the invariant ("trace invariant violated", ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal cross-check failed: a result that must be real came back
/// complex, a shifted polynomial disagrees with its source, and so on.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace su4
