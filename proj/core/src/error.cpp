#include "bss/error.hpp"

namespace bss {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicateIdentifier: return "DuplicateIdentifier";
    case ErrorKind::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorKind::InconsistentTable: return "InconsistentTable";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::UnknownParameter: return "UnknownParameter";
    case ErrorKind::EmptyCommonDomain: return "EmptyCommonDomain";
    case ErrorKind::BadEntry: return "BadEntry";
    case ErrorKind::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorKind::WeightCountMismatch: return "WeightCountMismatch";
    case ErrorKind::Io: return "IoError";
  }
  return "Error";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::DuplicateIdentifier:
    case ErrorKind::BadEntry:
      return 2;
    case ErrorKind::ConsistencyViolation:
    case ErrorKind::InconsistentTable:
      return 3;
    case ErrorKind::DomainMismatch:
    case ErrorKind::SizeMismatch:
    case ErrorKind::UniverseMismatch:
    case ErrorKind::UnknownParameter:
    case ErrorKind::EmptyCommonDomain:
      return 4;
    case ErrorKind::WeightOutOfRange:
    case ErrorKind::WeightCountMismatch:
      return 5;
    case ErrorKind::Io:
      return 1;
  }
  return 1;
}

}  // namespace bss
