#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Domain-level failure: a precondition or input contract was violated.
// `code` is a stable machine-readable identifier, `location` names the
// operation that rejected the input.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, std::string location, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)), location_(std::move(location)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }

 private:
  std::string code_;
  std::string location_;
};

[[noreturn]] inline void domain_error(const char* code, const char* location,
                                      const std::string& message) {
  throw DomainError(code, location, message);
}

}  // namespace toric
