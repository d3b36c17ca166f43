#pragma once

#include <stdexcept>
#include <string>

namespace contact {

enum class ErrorCode {
  MismatchedVars,
  Parse,
  InvalidInput,
  NonVanishing,
  NonTransverseBase,
  TruncationInsufficient,
  Degenerate,
  NotFiniteLength,
  Precondition,
  OutOfRange,
};

const char* to_string(ErrorCode code) noexcept;

// Single exception type for the library; the code lets callers (and the CLI
// exit-code mapping) distinguish input problems from computation failures.
class ContactError : public std::runtime_error {
 public:
  ContactError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Input errors are the caller's fault; everything else is a failed computation.
  bool is_input_error() const noexcept {
    return code_ == ErrorCode::Parse || code_ == ErrorCode::InvalidInput ||
           code_ == ErrorCode::NonVanishing ||
           code_ == ErrorCode::NonTransverseBase ||
           code_ == ErrorCode::MismatchedVars ||
           code_ == ErrorCode::OutOfRange;
  }

 private:
  ErrorCode code_;
};

}  // namespace contact
