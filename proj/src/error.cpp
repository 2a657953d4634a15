#include "negbeta/error.hpp"

namespace negbeta {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::AmbiguousDigit: return "AmbiguousDigit";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SpecPrefixTooShort: return "SpecPrefixTooShort";
    case ErrorKind::HorizonExhausted: return "HorizonExhausted";
    case ErrorKind::PrefixTooShort: return "PrefixTooShort";
    case ErrorKind::TruncationInsufficient: return "TruncationInsufficient";
    case ErrorKind::TwoSidedUnsupported: return "TwoSidedUnsupported";
    case ErrorKind::NoLFound: return "NoLFound";
    case ErrorKind::NotInGM: return "NotInGM";
    case ErrorKind::NoSelfLoop: return "NoSelfLoop";
    case ErrorKind::EmptyPer: return "EmptyPer";
    case ErrorKind::PatternMismatch: return "PatternMismatch";
    case ErrorKind::OddK: return "OddK";
    case ErrorKind::NotOddPeriodic: return "NotOddPeriodic";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::TooShort: return "TooShort";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace negbeta
