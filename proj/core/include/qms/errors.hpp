#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qms {

/// Thrown when an operation's input contract is violated. `code()` is a
/// stable machine-readable identifier (used by the CLI error object);
/// `what()` carries the human-readable detail.
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw ValidationError(code, message);
}

inline void require(bool condition, const std::string& code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace qms
