#pragma once

#include <stdexcept>
#include <string>

namespace phiconv {

// Bad user input: dimension mismatches, malformed grids, invalid flags.
struct InputError : std::invalid_argument {
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A stated hypothesis of an operation does not hold for the given data
// (non-convex table handed to the separation routine, missing touching
// point, unbounded sublevel sets, ...). Carries diagnostics in what().
struct HypothesisViolation : std::runtime_error {
  explicit HypothesisViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// Two routes that must agree disagreed beyond tolerance. Signals a bug in
// this library, not a user error.
struct InternalConsistencyError : std::logic_error {
  explicit InternalConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

// A verified conclusion that a theorem guarantees failed to verify.
// Signals a bug (or a genuinely broken hypothesis upstream).
struct TheoremViolation : std::logic_error {
  explicit TheoremViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace phiconv
