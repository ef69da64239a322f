#include "schemekit/error.hpp"

namespace schemekit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegerSpectrum: return "NonIntegerSpectrum";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::NotAScheme: return "NotAScheme";
    case ErrorKind::ClassCountMismatch: return "ClassCountMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NegativeKrein: return "NegativeKrein";
    case ErrorKind::NotTridiagonal: return "NotTridiagonal";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InconsistentMoments: return "InconsistentMoments";
    case ErrorKind::RepeatedRows: return "RepeatedRows";
    case ErrorKind::AntipodalClass: return "AntipodalClass";
    case ErrorKind::SelfClass: return "SelfClass";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::DegenerateSphere: return "DegenerateSphere";
    case ErrorKind::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::StructureError: return "StructureError";
  }
  return "Unknown";
}

namespace {
std::string format_message(ErrorKind kind, const std::string& detail) {
  std::string msg(to_string(kind));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}
}  // namespace

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(format_message(kind, detail)), kind_(kind), detail_(std::move(detail)) {}

}  // namespace schemekit
