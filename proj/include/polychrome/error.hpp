#pragma once

#include <stdexcept>
#include <string>

namespace polychrome {

// Caller supplied arguments that violate an operation's precondition.
class PreconditionError : public std::invalid_argument {
  public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An exhaustive search was asked to run above its configured size bound.
class BoundExceeded : public std::runtime_error {
  public:
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A construction produced output that failed its own post-check.
// Seeing one of these means a bug in this library, not bad input.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace polychrome
