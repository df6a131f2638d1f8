#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bss {

/// Error classes raised by the library. Each class maps to one stable CLI
/// exit code (see exit_code()).
enum class ErrorKind {
  Parse,
  DuplicateIdentifier,
  ConsistencyViolation,
  InconsistentTable,
  DomainMismatch,
  SizeMismatch,
  UniverseMismatch,
  UnknownParameter,
  EmptyCommonDomain,
  BadEntry,
  WeightOutOfRange,
  WeightCountMismatch,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// 0 ok; 2 parse; 3 consistency; 4 domain/parameter; 5 weights; 1 other.
int exit_code(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define BSS_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                      \
   public:                                                         \
    explicit Name(const std::string& message)                      \
        : Error(ErrorKind::Name, #Name ": " + message) {}          \
  }

BSS_DEFINE_ERROR(DuplicateIdentifier);
BSS_DEFINE_ERROR(InconsistentTable);
BSS_DEFINE_ERROR(DomainMismatch);
BSS_DEFINE_ERROR(SizeMismatch);
BSS_DEFINE_ERROR(UniverseMismatch);
BSS_DEFINE_ERROR(UnknownParameter);
BSS_DEFINE_ERROR(EmptyCommonDomain);
BSS_DEFINE_ERROR(BadEntry);
BSS_DEFINE_ERROR(WeightOutOfRange);
BSS_DEFINE_ERROR(WeightCountMismatch);

#undef BSS_DEFINE_ERROR

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorKind::Io, "IoError: " + message) {}
};

/// F(e) and G(not e) share an object. Carries the offending parameter label.
class ConsistencyViolation : public Error {
 public:
  ConsistencyViolation(std::string parameter, const std::string& detail)
      : Error(ErrorKind::ConsistencyViolation,
              "ConsistencyViolation(" + parameter + "): " + detail),
        parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

/// Malformed input file. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : Error(ErrorKind::Parse, format(message, line)), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& message, std::size_t line) {
    if (line == 0) return "ParseError: " + message;
    return "ParseError (line " + std::to_string(line) + "): " + message;
  }

  std::size_t line_;
};

}  // namespace bss
