#pragma once

#include <stdexcept>
#include <string>

namespace goodaction {

enum class ErrorKind {
  InvalidArgument,
  IndexOutOfRange,
  ParentMismatch,
  NotNormal,
  NotASubgroup,
  OrderBoundExceeded,
  NonSolvableUnsupported,
  NotAnAutomorphism,
  NotAHomomorphism,
  RelationViolated,
  NotLinearCharacter,
  IndexBoundExceeded,
  PreconditionFailed,
  SearchExhausted,
  HypothesisFailed,
  Unsupported,
  InternalError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
    case ErrorKind::NonSolvableUnsupported: return "NonSolvableUnsupported";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::RelationViolated: return "RelationViolated";
    case ErrorKind::NotLinearCharacter: return "NotLinearCharacter";
    case ErrorKind::IndexBoundExceeded: return "IndexBoundExceeded";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace goodaction
