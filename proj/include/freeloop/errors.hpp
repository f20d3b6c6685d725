#pragma once

#include <stdexcept>
#include <string>

namespace freeloop {

/// Bad input: malformed documents, presentations violating the required
/// invariants, out-of-range queries.  Maps to process exit code 1.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A built complex failed an internal self-check (d^2 != 0 after assembly).
/// This is a sign-engine regression, not a user error.  Exit code 2.
class internal_invariant_error : public std::logic_error {
  public:
    explicit internal_invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace freeloop
