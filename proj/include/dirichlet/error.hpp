#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dirichlet {

enum class Errc {
  ParseError,
  InvalidArgument,
  FieldMismatch,
  NotCoprime,
  DegreeTooSmall,
  FieldTooSmall,
  NoValidCycleLength,
  PreconditionViolation,
  NotSeparable,
  NotTransitive,
  NotASubgroup,
  DegreeTooLarge,
  OrderGuardExceeded,
  BudgetExceeded,
  NotASplitting,
  InvalidExtension,
  ActionNotFine,
  NotSurjective,
  KernelCondition,
  GuardExceeded,
};

constexpr std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::NoValidCycleLength: return "NoValidCycleLength";
    case Errc::PreconditionViolation: return "PreconditionViolation";
    case Errc::NotSeparable: return "NotSeparable";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::OrderGuardExceeded: return "OrderGuardExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotASplitting: return "NotASplitting";
    case Errc::InvalidExtension: return "InvalidExtension";
    case Errc::ActionNotFine: return "ActionNotFine";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::KernelCondition: return "KernelCondition";
    case Errc::GuardExceeded: return "GuardExceeded";
  }
  return "Unknown";
}

/// Every failure in the library is reported through this one exception type;
/// `code()` identifies the failure class.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace dirichlet
