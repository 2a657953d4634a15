#pragma once

#include <stdexcept>
#include <string>

namespace negbeta {

enum class ErrorKind {
  InvalidInput,
  DomainError,
  AmbiguousDigit,
  PrecisionExhausted,
  Undecidable,
  LengthMismatch,
  SpecPrefixTooShort,
  HorizonExhausted,
  PrefixTooShort,
  TruncationInsufficient,
  TwoSidedUnsupported,
  NoLFound,
  NotInGM,
  NoSelfLoop,
  EmptyPer,
  PatternMismatch,
  OddK,
  NotOddPeriodic,
  PreconditionFailed,
  TooShort,
};

const char* to_string(ErrorKind kind) noexcept;

// Every recoverable failure in the library is reported through this type; the
// kind lets callers (the CLI in particular) map failures to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace negbeta
