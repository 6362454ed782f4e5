#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wordlab {

/// Base class for all library errors: bad inputs, violated preconditions,
/// internal consistency failures.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation would need more of a factor set than its horizon
/// stores. Results are never silently truncated; the caller either rebuilds
/// with a larger horizon or treats the answer as unknown.
class HorizonError : public Error {
public:
  HorizonError(const std::string& what, std::size_t required, std::size_t available)
      : Error(what + " (requires horizon >= " + std::to_string(required) +
              ", have " + std::to_string(available) + ")"),
        required_(required),
        available_(available) {}

  std::size_t required() const { return required_; }
  std::size_t available() const { return available_; }

private:
  std::size_t required_;
  std::size_t available_;
};

}  // namespace wordlab
