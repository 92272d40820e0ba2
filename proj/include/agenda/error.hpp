#pragma once

#include <stdexcept>
#include <string>

namespace agenda {

enum class ErrorKind {
  Overlap,
  Coverage,
  EmptyBlock,
  GroundMismatch,
  IndexOutOfRange,
  TooSmall,
  SizeCap,
  CapExceeded,
  MalformedScale,
  UnknownParameter,
  NonLinearScale,
  DegenerateThreshold,
  IncompatibleRule,
  WrongSpace,
  NotInLattice,
  NotMaterialized,
  EmptyAgendaSet,
  UnknownAgent,
  NotBoolean,
  UnassignedAtom,
  SortError,
  UnsupportedCase,
  Parse,
  Validation,
  Invariant,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// 0 ok, 1 validation, 2 cap exceeded, 3 invariant violation
int exit_code(ErrorKind k);

}  // namespace agenda
