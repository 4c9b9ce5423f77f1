#pragma once

#include <stdexcept>
#include <string>

namespace twodd {

enum class ErrorKind {
  DegreeViolation,
  DanglingEndpoint,
  DuplicateArcId,
  DuplicateVertex,
  UnknownVertex,
  UnknownArc,
  NotSaturated,
  NotEntry,
  NotExit,
  EmptySelection,
  SelectionLengthMismatch,
  TooManyAcs,
  NotClosed,
  SaturatedGraph,
  MixedParityFound,
  NotASplitSet,
  NotMinimalPair,
  PreconditionViolated,
  NotEven,
  RouteNotOpen,
  KNotProper,
  NotSixArcs,
  NotFamilyF6,
  CapExceeded,
  CountMismatch,
  RouteNotUnique,
  NotNonHamiltonian,
  NotInC6,
  BudgetExceeded,
  ParseError,
  UsageError,
};

const char* to_string(ErrorKind k);

// All contract violations surface as Error; kind() tells callers which
// precondition failed without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind k, const std::string& msg);

}  // namespace twodd
