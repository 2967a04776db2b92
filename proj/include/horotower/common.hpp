#pragma once

#include <stdexcept>
#include <string>

namespace horotower {

// Thrown when an internal invariant is violated.  The message names the
// invariant so the CLI can surface it before exiting with status 1.
class InvariantError : public std::runtime_error {
public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

// Validation failures (bad user input, malformed files) use
// std::invalid_argument and map to CLI exit status 2.

inline void check_invariant(bool ok, const std::string& what) {
  if (!ok) throw InvariantError(what);
}

inline void check_arg(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace horotower
