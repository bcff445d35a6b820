#pragma once

#include <stdexcept>
#include <string>

namespace salcom {

// Bad input or a violated precondition. The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal cross-check disagreed. Always a bug (or a counterexample).
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace salcom
