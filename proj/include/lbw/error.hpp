#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lbw {

// Error codes used across the library. The CLI maps these to machine-readable
// JSON on stderr; tests match on the code rather than the message text.
enum class Err {
  DegreeTooHigh,
  TooLarge,
  IndexOutOfRange,
  EmptyInput,
  BadL,
  OddUniverse,
  NotPerfectMatching,
  RoundOutOfRange,
  MessageTooLong,
  SendCapExceeded,
  ShapeMismatch,
  BadNormalForm,
  OneSidedViolation,
  ContractViolation,
  PromiseClash,
  PromiseViolated,
  BadW,
  Disconnected,
  DegenerateParams,
  AlphaNotBelowW,
  Unachievable,
  Sizing,
  BadInput,
  Internal,
};

const char* err_name(Err code);

class DomainError : public std::runtime_error {
 public:
  DomainError(Err code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Err code() const { return code_; }
  const char* code_name() const { return err_name(code_); }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw DomainError(code, message);
}

inline void require(bool ok, Err code, const std::string& message) {
  if (!ok) fail(code, message);
}

}  // namespace lbw
