#pragma once

#include <stdexcept>
#include <string>

namespace greenring {

enum class ErrorKind {
  InvalidConductor,
  DivisionByZero,
  InvalidGroup,
  UnsupportedParameter,
  MissingTable,
  InvalidTable,
  NotACharacter,
  InvalidDatum,
  Unsupported,
  UnsupportedNonNilpotent,
  InternalConsistency,
  Domain,
  ProjectiveModule,
  UnsupportedRepresentation,
  InconsistentModule,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can emit a machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace greenring
