#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schemekit {

enum class ErrorKind {
  NonIntegerSpectrum,
  FieldMismatch,
  NotRational,
  NotAScheme,
  ClassCountMismatch,
  IndexOutOfRange,
  NegativeKrein,
  NotTridiagonal,
  InvalidWeights,
  DivisionByZero,
  InconsistentMoments,
  RepeatedRows,
  AntipodalClass,
  SelfClass,
  HypothesisUnmet,
  DegenerateSphere,
  UnsupportedParameters,
  ParseError,
  StructureError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. `kind` identifies the contract that
// was violated; `detail` carries the axiom id, step index, field name, etc.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace schemekit
