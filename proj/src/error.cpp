#include "agenda/error.hpp"

namespace agenda {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Overlap: return "OverlapError";
    case ErrorKind::Coverage: return "CoverageError";
    case ErrorKind::EmptyBlock: return "EmptyBlockError";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::MalformedScale: return "MalformedScale";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::NonLinearScale: return "NonLinearScale";
    case ErrorKind::DegenerateThreshold: return "DegenerateThreshold";
    case ErrorKind::IncompatibleRule: return "IncompatibleRule";
    case ErrorKind::WrongSpace: return "WrongSpace";
    case ErrorKind::NotInLattice: return "NotInLattice";
    case ErrorKind::NotMaterialized: return "NotMaterialized";
    case ErrorKind::EmptyAgendaSet: return "EmptyAgendaSet";
    case ErrorKind::UnknownAgent: return "UnknownAgent";
    case ErrorKind::NotBoolean: return "NotBoolean";
    case ErrorKind::UnassignedAtom: return "UnassignedAtom";
    case ErrorKind::SortError: return "SortError";
    case ErrorKind::UnsupportedCase: return "UnsupportedCase";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::Invariant: return "InvariantViolation";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::SizeCap:
    case ErrorKind::CapExceeded:
    case ErrorKind::NotMaterialized:
      return 2;
    case ErrorKind::Invariant:
      return 3;
    default:
      return 1;
  }
}

}  // namespace agenda
