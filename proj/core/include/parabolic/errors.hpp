#pragma once

#include <stdexcept>
#include <string>

namespace parabolic {

// Raised when an argument violates a mathematical invariant. The invariant
// name is stable and machine readable (the CLI reports it verbatim).
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string invariant, const std::string& message)
      : std::runtime_error(message), invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

// Raised for text that cannot be parsed at all (bad rational literal, etc).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace parabolic
