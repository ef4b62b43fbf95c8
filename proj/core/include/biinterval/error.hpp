#pragma once

#include <stdexcept>
#include <string>

namespace biinterval {

enum class ErrorKind {
  EmptyInterval,
  OverlappingIntervals,
  NotSpectral,
  CaseUnavailable,
  EvenP,
  DomainError,
  NotATile,
  NotVerified,
};

const char* to_string(ErrorKind kind);

/// All recoverable library failures. The kind is stable and is what the CLI
/// maps to diagnostics; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace biinterval
